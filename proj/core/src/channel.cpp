#include "tim/channel.hpp"

#include <cmath>
#include <random>

#include "tim/error.hpp"

namespace tim {

ReceivedSymbol make_symbol(const MultisineWaveform& x, double channel, std::span<const double> noise) {
    if (noise.size() != x.size())
        throw DimensionError("make_symbol: noise length does not match waveform length");
    ReceivedSymbol out;
    out.channel = channel;
    out.true_tones = x.tones;
    out.samples.resize(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) out.samples[k] = channel * x.samples[k] + noise[k];
    return out;
}

void draw_symbol(const MultisineWaveform& x, const TimConfig& cfg, CounterRng& rng, ReceivedSymbol& out) {
    std::normal_distribution<double> gauss;
    const double sh = std::sqrt(cfg.channel_var);
    const double sn = std::sqrt(cfg.noise_var);
    out.channel = sh * gauss(rng);
    out.true_tones = x.tones;
    out.samples.resize(x.size());
    for (std::size_t k = 0; k < x.size(); ++k)
        out.samples[k] = out.channel * x.samples[k] + sn * gauss(rng);
}

ReceivedSymbol draw_symbol(const MultisineWaveform& x, const TimConfig& cfg, const StreamKey& key) {
    CounterRng rng(key);
    ReceivedSymbol out;
    draw_symbol(x, cfg, rng, out);
    return out;
}

}  // namespace tim
