#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "tim/channel.hpp"
#include "tim/config.hpp"
#include "tim/waveform.hpp"

namespace tim {

/// Per-hypothesis constants of the non-coherent ML detector.
///
/// Conditioned on x_i, r ~ N(0, R_i) with R_i = sn2 I + sh2 x_i x_i^T. The
/// rank-one structure gives, without forming any K x K matrix,
///   log|R_i| = K log(sn2) + log(1 + (sh2/sn2) |x_i|^2)
///   r^T R_i^{-1} r = r^T r / sn2 - gain_i (x_i^T r)^2,
///   gain_i = (sh2/sn2^2) / (1 + (sh2/sn2) |x_i|^2).
/// Only statistical channel knowledge (sh2, sn2) enters; never the realized h.
class HypothesisCache {
public:
    HypothesisCache(const WaveformSet& waveforms, const TimConfig& cfg);

    std::size_t size() const { return entries_.size(); }
    std::size_t samples_per_symbol() const { return samples_per_symbol_; }

    int tones(std::size_t i) const { return entries_[i].tones; }
    std::span<const double> samples(std::size_t i) const { return entries_[i].samples; }
    double energy(std::size_t i) const { return entries_[i].energy; }
    double log_det(std::size_t i) const { return entries_[i].log_det; }
    double gain(std::size_t i) const { return entries_[i].gain; }

    /// -(K/2) log(2 pi), shared by all hypotheses.
    double normalization() const { return normalization_; }
    double noise_var() const { return noise_var_; }

private:
    struct Entry {
        int tones;
        std::vector<double> samples;
        double energy;
        double log_det;
        double gain;
    };

    std::vector<Entry> entries_;
    std::size_t samples_per_symbol_ = 0;
    double normalization_ = 0.0;
    double noise_var_ = 1.0;
};

/// Multiply-add tally, for checking the O(K |S|) cost of detection.
struct OpCounter {
    std::size_t multiply_adds = 0;
};

/// log p(r | x_i).
double log_likelihood(std::span<const double> r, std::size_t hypothesis, const HypothesisCache& cache);
double log_likelihood(const ReceivedSymbol& r, std::size_t hypothesis, const HypothesisCache& cache);

/// argmax_i log p(r | x_i); ties go to the smaller tone count.
int detect(std::span<const double> r, const HypothesisCache& cache, OpCounter* ops = nullptr);
int detect(const ReceivedSymbol& r, const HypothesisCache& cache, OpCounter* ops = nullptr);

/// Index into the cache of the detected hypothesis (same rule as detect).
std::size_t detect_index(std::span<const double> r, const HypothesisCache& cache, OpCounter* ops = nullptr);

}  // namespace tim
