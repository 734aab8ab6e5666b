#include "tim/waveform.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tim/error.hpp"

namespace tim {

double tone_spacing(int tones, double bandwidth_hz) {
    if (tones < 2) throw DomainError("tone_spacing: need at least 2 tones, got " + std::to_string(tones));
    if (!(bandwidth_hz > 0.0)) throw DomainError("tone_spacing: bandwidth must be positive");
    return bandwidth_hz / (tones - 1);
}

MultisineWaveform sample_waveform(int tones, const TimConfig& cfg) {
    cfg.validate();
    bool admissible = tones == cfg.nstar;
    for (int s : cfg.set) admissible = admissible || s == tones;
    if (!admissible)
        throw ConfigError("set", "tone count " + std::to_string(tones) + " is neither in the set nor nstar");

    MultisineWaveform w;
    w.tones = tones;
    w.tone_spacing_hz = tone_spacing(tones, cfg.bandwidth_hz);
    const auto K = static_cast<long long>(cfg.samples_per_symbol);
    w.samples.resize(static_cast<std::size_t>(K));

    const double amp = std::sqrt(cfg.power / tones);
    // u_k = k * num / den; reduce k*num modulo 2*den so that the sines are
    // evaluated on [0, 2), where both numerator and denominator are 2-periodic.
    const long long num = cfg.nstar - 1;
    const long long den = static_cast<long long>(tones - 1) * K;
    for (long long k = 1; k <= K; ++k) {
        const long long scaled = k * num;
        double value;
        if (scaled % den == 0) {
            const long long m = scaled / den;
            const bool negative = ((tones - 1) * m) % 2 != 0;
            value = negative ? -tones : tones;
        } else {
            const double u = static_cast<double>(scaled % (2 * den)) / static_cast<double>(den);
            value = std::sin(std::numbers::pi * tones * u) / std::sin(std::numbers::pi * u);
        }
        w.samples[static_cast<std::size_t>(k - 1)] = amp * value;
    }

    double e = 0.0;
    for (double s : w.samples) e += s * s;
    w.energy = e;
    w.xi = e / static_cast<double>(K);
    return w;
}

PassbandMoments fine_passband_moments(int tones, double power, int oversample) {
    if (tones < 1) throw DomainError("fine_passband_moments: need at least one tone");
    if (!(power >= 0.0)) throw DomainError("fine_passband_moments: power must be >= 0");
    if (oversample < 8 * tones)
        throw DomainError("fine_passband_moments: oversample " + std::to_string(oversample) +
                          " below aliasing guard 8N = " + std::to_string(8 * tones));

    const double amp = std::sqrt(2.0 * power / tones);
    double m2 = 0.0;
    double m4 = 0.0;
    for (int m = 0; m < oversample; ++m) {
        double x = 0.0;
        for (int n = 0; n < tones; ++n) {
            // integer phase index keeps the argument reduction exact
            const long long cycles = static_cast<long long>(tones + n) * m % oversample;
            x += std::cos(2.0 * std::numbers::pi * static_cast<double>(cycles) / oversample);
        }
        x *= amp;
        const double x2 = x * x;
        m2 += x2;
        m4 += x2 * x2;
    }
    return {m2 / oversample, m4 / oversample};
}

WaveformSet::WaveformSet(const TimConfig& cfg) {
    cfg.validate();
    waveforms_.reserve(cfg.set.size());
    for (int n : cfg.set) waveforms_.push_back(sample_waveform(n, cfg));
}

const MultisineWaveform& WaveformSet::by_tones(int tones) const {
    for (const auto& w : waveforms_)
        if (w.tones == tones) return w;
    throw ConfigError("set", "tone count " + std::to_string(tones) + " not in set");
}

}  // namespace tim
