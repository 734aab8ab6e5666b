#include "tim/tim_detector.hpp"

#include <cmath>
#include <numbers>

#include "tim/error.hpp"

namespace tim {

HypothesisCache::HypothesisCache(const WaveformSet& waveforms, const TimConfig& cfg)
    : samples_per_symbol_(static_cast<std::size_t>(cfg.samples_per_symbol)), noise_var_(cfg.noise_var) {
    if (waveforms.size() == 0) throw ConfigError("set", "empty hypothesis set");
    const double snr = cfg.channel_var / cfg.noise_var;
    const double K = static_cast<double>(samples_per_symbol_);
    normalization_ = -0.5 * K * std::log(2.0 * std::numbers::pi);
    entries_.reserve(waveforms.size());
    for (const auto& w : waveforms) {
        if (w.size() != samples_per_symbol_)
            throw DimensionError("HypothesisCache: waveform length does not match samples_per_symbol");
        Entry e;
        e.tones = w.tones;
        e.samples = w.samples;
        e.energy = w.energy;
        e.log_det = K * std::log(cfg.noise_var) + std::log1p(snr * w.energy);
        e.gain = (cfg.channel_var / (cfg.noise_var * cfg.noise_var)) / (1.0 + snr * w.energy);
        entries_.push_back(std::move(e));
    }
}

namespace {

double dot(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

void check_length(std::span<const double> r, const HypothesisCache& cache) {
    if (r.size() != cache.samples_per_symbol())
        throw DimensionError("received symbol length does not match the hypothesis waveforms");
}

}  // namespace

double log_likelihood(std::span<const double> r, std::size_t hypothesis, const HypothesisCache& cache) {
    check_length(r, cache);
    if (hypothesis >= cache.size()) throw DimensionError("log_likelihood: hypothesis index out of range");
    const double ip = dot(cache.samples(hypothesis), r);
    const double quad = dot(r, r) / cache.noise_var() - cache.gain(hypothesis) * ip * ip;
    return cache.normalization() - 0.5 * cache.log_det(hypothesis) - 0.5 * quad;
}

double log_likelihood(const ReceivedSymbol& r, std::size_t hypothesis, const HypothesisCache& cache) {
    return log_likelihood(r.view(), hypothesis, cache);
}

std::size_t detect_index(std::span<const double> r, const HypothesisCache& cache, OpCounter* ops) {
    check_length(r, cache);
    if (cache.size() == 0) throw ConfigError("set", "empty hypothesis set");
    // r^T r / sn2 and the normalization are common to all hypotheses and drop
    // out of the argmax.
    std::size_t best = 0;
    double best_score = 0.0;
    for (std::size_t i = 0; i < cache.size(); ++i) {
        const double ip = dot(cache.samples(i), r);
        const double score = cache.gain(i) * ip * ip - cache.log_det(i);
        if (i == 0 || score > best_score) {
            best = i;
            best_score = score;
        }
    }
    if (ops) ops->multiply_adds += cache.size() * r.size();
    return best;
}

int detect(std::span<const double> r, const HypothesisCache& cache, OpCounter* ops) {
    return cache.tones(detect_index(r, cache, ops));
}

int detect(const ReceivedSymbol& r, const HypothesisCache& cache, OpCounter* ops) {
    return detect(r.view(), cache, ops);
}

}  // namespace tim
