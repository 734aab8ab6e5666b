#include <gtest/gtest.h>

#include <cmath>

#include "tim/error.hpp"
#include "tim/papr_detector.hpp"
#include "tim/waveform.hpp"

using namespace tim;

TEST(Waveform, EnergiesAtReferenceConfig) {
    const TimConfig cfg;
    EXPECT_NEAR(sample_waveform(4, cfg).energy, 45.25, 1e-12);
    EXPECT_NEAR(sample_waveform(8, cfg).energy, 35.375, 1e-12);
}

TEST(Waveform, NoiseFreePapr) {
    const TimConfig cfg;
    EXPECT_NEAR(papr(sample_waveform(4, cfg).samples), 2.7403, 1e-4);
    EXPECT_NEAR(papr(sample_waveform(8, cfg).samples), 7.0106, 1e-4);
}

TEST(Waveform, SamplePowerTakesTwoValuesWhenKIsNstarMinusOne) {
    // k (N*-1) / ((N-1) K) = k / (N-1): the Dirichlet ratio is +-1 off the peaks
    TimConfig cfg;
    cfg.power = 2.5;
    for (int n : {4, 8}) {
        const auto x = sample_waveform(n, cfg);
        for (double v : x.samples) {
            const double p = v * v;
            const bool floor = std::abs(p - cfg.power / n) < 1e-12;
            const bool peak = std::abs(p - n * cfg.power) < 1e-9;
            EXPECT_TRUE(floor || peak) << "N=" << n << " sample power " << p;
        }
    }
}

TEST(Waveform, SingularSamplesTakeTheLimit) {
    TimConfig cfg;
    cfg.set = {4};
    cfg.nstar = 4;
    cfg.samples_per_symbol = 3;  // u = k/3, integer at k = 3
    const auto x = sample_waveform(4, cfg);
    ASSERT_EQ(x.size(), 3u);
    EXPECT_TRUE(std::isfinite(x.samples[2]));
    // u = 1, m = 1: sqrt(P/N) N (-1)^((N-1) m) = -2
    EXPECT_NEAR(x.samples[2], -2.0, 1e-12);
}

TEST(Waveform, MeanPowerMatchesEnergy) {
    const TimConfig cfg;
    const auto x = sample_waveform(8, cfg);
    EXPECT_NEAR(x.xi * static_cast<double>(x.size()), x.energy, 1e-12);
    EXPECT_NEAR(x.tone_spacing_hz, cfg.bandwidth_hz / 7.0, 1e-12);
}

TEST(Waveform, ZeroPowerIsSilent) {
    const auto x = sample_waveform(4, TimConfig{}.with_power(0.0));
    for (double v : x.samples) EXPECT_EQ(v, 0.0);
}

TEST(Waveform, RejectsToneCountsOutsideTheSet) {
    const TimConfig cfg;
    EXPECT_THROW(sample_waveform(16, cfg), ConfigError);
    EXPECT_NO_THROW(sample_waveform(32, cfg));  // the reference count is always allowed
    EXPECT_THROW(tone_spacing(1, 1000.0), DomainError);
}

TEST(Waveform, PassbandMomentsAreExactAboveTheGuard) {
    for (int n : {1, 4, 8, 16, 32}) {
        const auto m = fine_passband_moments(n, 3.0, 8 * n);
        EXPECT_NEAR(m.second, 3.0, 1e-12);
        EXPECT_NEAR(m.fourth, (2.0 * n * n + 1.0) / (2.0 * n) * 9.0, 1e-10 * n);
        const auto finer = fine_passband_moments(n, 3.0, 64 * n + 5);
        EXPECT_NEAR(finer.fourth, m.fourth, 1e-10 * n);
    }
    EXPECT_THROW(fine_passband_moments(8, 1.0, 63), DomainError);
}

TEST(Waveform, SetCacheKeepsOrder) {
    TimConfig cfg;
    cfg.set = {4, 8, 16, 32};
    const WaveformSet set(cfg);
    ASSERT_EQ(set.size(), 4u);
    EXPECT_EQ(set[2].tones, 16);
    EXPECT_EQ(set.by_tones(32).tones, 32);
    EXPECT_THROW(set.by_tones(5), ConfigError);
}
