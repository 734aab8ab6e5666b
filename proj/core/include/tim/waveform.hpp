#pragma once

#include <span>
#include <vector>

#include "tim/config.hpp"

namespace tim {

/// Sampled envelope of a zero-phase, equal-amplitude N-tone multisine.
struct MultisineWaveform {
    int tones = 0;
    std::vector<double> samples;   ///< x[1..K], amplitude in sqrt(W)
    double tone_spacing_hz = 0.0;  ///< W / (N - 1)
    double energy = 0.0;           ///< sum_k x[k]^2
    double xi = 0.0;               ///< energy / K, mean sample power

    std::size_t size() const { return samples.size(); }
};

/// Intercarrier spacing of an N-tone signal spanning `bandwidth_hz`.
double tone_spacing(int tones, double bandwidth_hz);

/// Samples the envelope on t_k = k T / K, k = 1..K, with T = (N* - 1) / W.
///
/// The dimensionless Dirichlet argument is k (N* - 1) / ((N - 1) K), so it is
/// rational and exact integer tests find the removable singularities, where
/// the sample takes the limit sqrt(P/N) * N * (-1)^((N-1) m).
MultisineWaveform sample_waveform(int tones, const TimConfig& cfg);

struct PassbandMoments {
    double second = 0.0;  ///< time average of x(t)^2
    double fourth = 0.0;  ///< time average of x(t)^4
};

/// Time averages of the passband multisine (per-tone amplitude sqrt(2P/N)),
/// taken over one full period 1/delta_f with `oversample` uniform points.
///
/// Tones sit at (N + n) delta_f, n = 0..N-1, so x^4 is a trigonometric
/// polynomial of degree below 8N and the rectangle rule is exact once
/// oversample >= 8N. Smaller values are refused.
PassbandMoments fine_passband_moments(int tones, double power, int oversample);

/// Immutable cache of the waveforms of one configuration, in set order.
class WaveformSet {
public:
    explicit WaveformSet(const TimConfig& cfg);

    std::size_t size() const { return waveforms_.size(); }
    const MultisineWaveform& operator[](std::size_t i) const { return waveforms_[i]; }
    const MultisineWaveform& by_tones(int tones) const;
    std::span<const MultisineWaveform> all() const { return waveforms_; }

    auto begin() const { return waveforms_.begin(); }
    auto end() const { return waveforms_.end(); }

private:
    std::vector<MultisineWaveform> waveforms_;
};

}  // namespace tim
