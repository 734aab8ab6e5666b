#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "tim/analytics.hpp"
#include "tim/error.hpp"
#include "tim/simkit.hpp"
#include "tim_validation/oracles.hpp"

using namespace tim;

namespace {

TimConfig four_tones(double power = 1.0) {
    TimConfig c;
    c.set = {4, 8, 16, 32};
    c.power = power;
    return c;
}

EigenSystem synthetic(double mu1, double mu2, double phi) {
    EigenSystem es;
    es.mu1 = mu1;
    es.mu2 = mu2;
    es.phi = phi;
    return es;
}

}  // namespace

TEST(Eigensystem, SignLayoutAndDenseAgreement) {
    const auto cfg = four_tones();
    const WaveformSet waves(cfg);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (i == j) continue;
            const auto es = eigensystem(waves[i], waves[j], cfg);
            const auto dense = oracle::dense_pairwise(waves[i], waves[j], cfg);
            EXPECT_GT(es.lambda1, 0.0);
            EXPECT_LT(es.lambda2, 0.0);
            EXPECT_EQ(dense.significant, 2);
            EXPECT_NEAR(es.mu1, dense.mu_pos, 1e-10 * dense.mu_norm);
            EXPECT_NEAR(es.mu2, dense.mu_neg, 1e-10 * dense.mu_norm);
            EXPECT_NEAR(es.phi, std::log1p(waves[j].energy) - std::log1p(waves[i].energy), 1e-14);
        }
    }
}

TEST(Eigensystem, ParallelWaveformsAreRejected) {
    const auto cfg = four_tones();
    const auto x = sample_waveform(8, cfg);
    EXPECT_THROW(eigensystem(x, x, cfg), RankDeficiencyError);
    EXPECT_THROW(eigensystem(x, sample_waveform(8, cfg.with_power(3.0)), cfg), RankDeficiencyError);
}

TEST(PairwiseError, SymmetricFormAtZeroThresholdIsOneHalf) {
    const auto es = synthetic(1.0, -1.0, 0.0);
    EXPECT_NEAR(pairwise_error_integral(es), 0.5, 1e-12);
    // (2/pi) atan(sqrt(rho)) in general
    const auto skew = synthetic(0.3, -2.0, 0.0);
    EXPECT_NEAR(pairwise_error_integral(skew), 2.0 / std::numbers::pi * std::atan(std::sqrt(0.15)), 1e-12);
    EXPECT_NEAR(pairwise_error_series(skew).value, pairwise_error_integral(skew), 1e-12);
}

TEST(PairwiseError, SeriesMatchesIntegralForBothSignsOfPhi) {
    for (double phi : {-0.8, -0.1, 0.0, 0.05, 0.6, 3.0}) {
        const auto es = synthetic(0.4, -3.0, phi);
        const auto s = pairwise_error_series(es);
        ASSERT_TRUE(s.converged) << phi;
        EXPECT_NEAR(s.value, pairwise_error_integral(es), 1e-10) << phi;
    }
}

TEST(PairwiseError, PartialSumsBracketTheLimit) {
    const auto es = synthetic(0.5, -1.0, 0.3);
    const auto s = pairwise_error_series(es);
    ASSERT_TRUE(s.converged);
    for (std::size_t k = 0; k + 1 < s.partial_sums.size(); k += 2) EXPECT_GE(s.partial_sums[k] + 1e-15, s.value);
    for (std::size_t k = 1; k < s.partial_sums.size(); k += 2) EXPECT_LE(s.partial_sums[k] - 1e-15, s.value);
}

TEST(PairwiseError, DivergentSeriesIsFlaggedNotThrown) {
    const auto es = synthetic(5.0, -1.0, 0.5);
    SeriesResult s;
    EXPECT_NO_THROW(s = pairwise_error_series(es));
    EXPECT_FALSE(s.converged);
    EXPECT_GT(pairwise_error_integral(es), 0.0);
}

TEST(PairwiseError, AgreesWithDirectSampling) {
    const auto cfg = TimConfig{};
    const WaveformSet waves(cfg);
    const auto es = eigensystem(waves[0], waves[1], cfg);
    const double p = pairwise_error_integral(es);
    const auto mc = pairwise_mc_oracle(es, 400000, 17);
    EXPECT_NEAR(mc.value, p, 3.0 * std::sqrt(p * (1 - p) / 400000.0));
}

TEST(PairwiseError, RejectsBadEigensystems) {
    EXPECT_THROW(pairwise_error_integral(synthetic(1.0, 1.0, 0.0)), DomainError);
    EXPECT_THROW(pairwise_error_series(synthetic(NAN, -1.0, 0.0)), DomainError);
}

TEST(UnionBound, ZeroPowerFollowsTheTieRule) {
    TimConfig cfg;
    cfg.power = 0.0;
    EXPECT_NEAR(tim_union_bound(cfg).value, 0.5, 1e-15);
    cfg.set = {4, 8, 16, 32};
    const auto ub = tim_union_bound(cfg);
    EXPECT_NEAR(ub.raw, 1.5, 1e-15);
    EXPECT_TRUE(ub.clipped);
    EXPECT_EQ(ub.value, 1.0);
}

TEST(UnionBound, DecreasesWithPower) {
    TimConfig cfg;
    double prev = 1.0;
    for (double p : power_sweep(1e-2, 1e2, 9, SweepScale::log)) {
        const double v = tim_union_bound(cfg.with_power(p)).value;
        EXPECT_LT(v, prev);
        prev = v;
    }
    cfg.set = {4};
    EXPECT_THROW(tim_union_bound(cfg), ConfigError);
}

TEST(PaprCdf, IsADistributionFunction) {
    const TimConfig cfg;
    const auto x = sample_waveform(8, cfg);
    double prev = 0.0;
    for (double theta : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 31.0, 60.0}) {
        const auto r = papr_cdf_detailed(theta, x, cfg);
        EXPECT_TRUE(r.converged) << theta;
        EXPECT_GE(r.value, prev - 1e-12);
        EXPECT_LE(r.value, 1.0);
        prev = r.value;
    }
    EXPECT_EQ(papr_cdf(0.0, x, cfg), 0.0);
    EXPECT_EQ(papr_cdf(INFINITY, x, cfg), 1.0);
    EXPECT_GT(prev, 0.999);
    EXPECT_THROW(papr_cdf(-1.0, x, cfg), DomainError);
}

TEST(PaprCdf, ConventionsCoincideAtUnitNoise) {
    const TimConfig cfg;
    PaprCdfOptions scaled;
    scaled.normalization = PaprNormalization::noise_scaled;
    EXPECT_EQ(papr_cdf(6.0, 4, cfg), papr_cdf(6.0, 4, cfg, scaled));
    auto noisy = cfg;
    noisy.noise_var = 2.0;
    EXPECT_NEAR(papr_cdf(6.0, 4, noisy, scaled), papr_cdf(3.0, 4, noisy), 1e-12);
}

TEST(PaprError, LowPowerLimit) {
    TimConfig cfg;
    cfg.power = 1e-9;
    EXPECT_NEAR(papr_error_prob(cfg).value, 0.5, 0.02);
    cfg.set = {4, 8, 16, 32};
    EXPECT_NEAR(papr_error_prob(cfg).value, 0.75, 0.02);
}

TEST(Harvest, ClosedForm) {
    TimConfig cfg;
    cfg.power = 2.0;
    cfg.channel_var = 0.5;
    const double q = harvested_energy(8, cfg);
    EXPECT_NEAR(q, 0.0034 * 0.5 * 2.0 + 3.0 * 0.3829 * 0.25 * (129.0 / 16.0) * 4.0, 1e-12);
    EXPECT_EQ(harvested_energy(8, cfg.with_power(0.0)), 0.0);
    EXPECT_THROW(harvested_energy(0, cfg), DomainError);
}

TEST(Harvest, Tradeoff) {
    TimConfig cfg;
    cfg.set = {4, 8, 16, 32};
    const auto t = tradeoff(cfg);
    EXPECT_NEAR(t.rate_bits_per_sec, 2.0 * 1000.0 / 31.0, 1e-12);
    EXPECT_NEAR(t.avg_energy, (harvested_energy(4, cfg) + harvested_energy(8, cfg) + harvested_energy(16, cfg) +
                               harvested_energy(32, cfg)) / 4.0, 1e-12);
    EXPECT_GT(t.avg_energy, t.avg_energy_large_n);  // (2N^2+1)/(2N) > N
    EXPECT_NEAR(t.avg_energy / t.avg_energy_large_n, 1.0, 0.01);
}
