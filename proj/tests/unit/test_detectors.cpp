#include <gtest/gtest.h>

#include <cmath>

#include "tim/error.hpp"
#include "tim/papr_detector.hpp"
#include "tim/rng.hpp"
#include "tim/tim_detector.hpp"
#include "tim_validation/oracles.hpp"

using namespace tim;

namespace {

TimConfig four_tones() {
    TimConfig c;
    c.set = {4, 8, 16, 32};
    return c;
}

}  // namespace

TEST(TimDetector, LikelihoodMatchesDenseGaussian) {
    for (double sn2 : {0.5, 1.0, 3.0}) {
        auto cfg = four_tones();
        cfg.noise_var = sn2;
        cfg.channel_var = 1.7;
        const WaveformSet waves(cfg);
        const HypothesisCache cache(waves, cfg);
        for (std::uint64_t t = 0; t < 5; ++t) {
            const auto r = draw_symbol(waves[t % 4], cfg, StreamKey{2, 0, t});
            for (std::size_t i = 0; i < waves.size(); ++i) {
                const double fast = log_likelihood(r, i, cache);
                const double dense = oracle::dense_log_likelihood(r.samples, waves[i], cfg);
                EXPECT_NEAR(fast, dense, 1e-9 * std::abs(dense));
            }
        }
    }
}

TEST(TimDetector, DetectIsTheArgmax) {
    const auto cfg = four_tones();
    const WaveformSet waves(cfg);
    const HypothesisCache cache(waves, cfg);
    for (std::uint64_t t = 0; t < 200; ++t) {
        const auto r = draw_symbol(waves[t % 4], cfg, StreamKey{4, 0, t});
        std::size_t best = 0;
        for (std::size_t i = 1; i < waves.size(); ++i)
            if (log_likelihood(r, i, cache) > log_likelihood(r, best, cache)) best = i;
        EXPECT_EQ(detect_index(r.samples, cache), best);
        EXPECT_EQ(detect(r, cache), cfg.set[best]);
    }
}

TEST(TimDetector, TiesGoToTheSmallestToneCount) {
    const auto cfg = four_tones().with_power(0.0);
    const WaveformSet waves(cfg);
    const HypothesisCache cache(waves, cfg);
    const std::vector<double> r(31, 0.3);
    EXPECT_EQ(detect(r, cache), 4);
}

TEST(TimDetector, CostIsLinearInK) {
    for (int k : {31, 62, 124}) {
        auto cfg = four_tones();
        cfg.samples_per_symbol = k;
        const WaveformSet waves(cfg);
        const HypothesisCache cache(waves, cfg);
        OpCounter ops;
        (void)detect(std::vector<double>(static_cast<std::size_t>(k), 1.0), cache, &ops);
        EXPECT_EQ(ops.multiply_adds, 4u * static_cast<std::size_t>(k));
    }
}

TEST(TimDetector, HighSnrDetectsCorrectly) {
    auto cfg = four_tones().with_power(1e4);
    cfg.noise_var = 1e-3;
    const WaveformSet waves(cfg);
    const HypothesisCache cache(waves, cfg);
    for (std::uint64_t t = 0; t < 40; ++t) {
        const auto r = draw_symbol(waves[t % 4], cfg, StreamKey{6, 0, t});
        if (std::abs(r.channel) < 0.05) continue;  // deep fade
        EXPECT_EQ(detect(r, cache), cfg.set[t % 4]);
    }
}

TEST(TimDetector, RejectsWrongLength) {
    const auto cfg = four_tones();
    const WaveformSet waves(cfg);
    const HypothesisCache cache(waves, cfg);
    EXPECT_THROW(detect(std::vector<double>(30, 1.0), cache), DimensionError);
    EXPECT_THROW(log_likelihood(std::vector<double>(32, 1.0), 0, cache), DimensionError);
}

TEST(PaprDetector, BoundariesAndNearestLevel) {
    const std::vector<int> set{4, 8, 16, 32};
    EXPECT_EQ(decision_boundaries(set), (std::vector<double>{6, 12, 24}));
    EXPECT_EQ(detect_papr(5.9, set), 4);
    EXPECT_EQ(detect_papr(6.0, set), 4);  // equidistant goes down
    EXPECT_EQ(detect_papr(6.1, set), 8);
    EXPECT_EQ(detect_papr(100.0, set), 32);
    EXPECT_EQ(detect_papr(0.5, set), 4);
    EXPECT_THROW(decision_boundaries(std::vector<int>{4}), ConfigError);
}

TEST(PaprDetector, StatisticIsScaleFree) {
    const std::vector<double> r{1.0, -3.0, 0.5, 2.0};
    std::vector<double> scaled;
    for (double v : r) scaled.push_back(-7.0 * v);
    EXPECT_NEAR(papr(r), 9.0 / (14.25 / 4.0), 1e-12);
    EXPECT_NEAR(papr(scaled), papr(r), 1e-12);
    EXPECT_THROW(papr(std::vector<double>(5, 0.0)), DomainError);
}
