#pragma once

#include <span>
#include <vector>

#include "tim/config.hpp"
#include "tim/rng.hpp"
#include "tim/waveform.hpp"

namespace tim {

/// Noisy envelope samples of one symbol after flat fading.
struct ReceivedSymbol {
    std::vector<double> samples;  ///< r[k] = h x[k] + n[k]
    double channel = 0.0;         ///< h, constant over the symbol
    int true_tones = 0;

    std::span<const double> view() const { return samples; }
};

/// Builds r = h x + n from explicit channel and noise values.
ReceivedSymbol make_symbol(const MultisineWaveform& x, double channel, std::span<const double> noise);

/// Draws h ~ N(0, channel_var) then K noise samples ~ N(0, noise_var) from `rng`,
/// writing into `out` (its buffer is reused across calls).
void draw_symbol(const MultisineWaveform& x, const TimConfig& cfg, CounterRng& rng, ReceivedSymbol& out);

/// Same draw from the dedicated stream `key`; bit-identical for equal keys.
ReceivedSymbol draw_symbol(const MultisineWaveform& x, const TimConfig& cfg, const StreamKey& key);

}  // namespace tim
