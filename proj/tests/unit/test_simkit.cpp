#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "tim/analytics.hpp"
#include "tim/detail/parallel.hpp"
#include "tim/error.hpp"
#include "tim/simkit.hpp"

using namespace tim;

namespace {

bool same(const ErrorCurvePoint& a, const ErrorCurvePoint& b) {
    return a.power == b.power && a.pe_tim_sim == b.pe_tim_sim && a.pe_papr_sim == b.pe_papr_sim &&
           a.pe_tim_bound == b.pe_tim_bound && a.q_sampled == b.q_sampled && a.trials == b.trials;
}

}  // namespace

TEST(Simkit, ResultsDoNotDependOnWorkers) {
    TimConfig cfg;
    cfg.set = {4, 8, 16};
    cfg.nstar = 16;
    cfg.samples_per_symbol = 15;
    cfg.trials = 9000;
    const std::vector<double> powers{0.1, 3.0};
    SweepOptions opts;
    opts.papr = true;
    opts.harvest = true;
    const auto one = run_sweep(cfg, powers, opts, {1});
    const auto three = run_sweep(cfg, powers, opts, {3});
    ASSERT_EQ(one.size(), three.size());
    for (std::size_t i = 0; i < one.size(); ++i) EXPECT_TRUE(same(one[i], three[i]));
}

TEST(Simkit, IndistinguishableHypothesesGiveOneHalf) {
    TimConfig cfg;
    cfg.channel_var = 1e-12;
    cfg.trials = 10000;
    const std::vector<double> powers{1.0};
    const auto pt = run_tim_sweep(cfg, powers).front();
    EXPECT_NEAR(pt.pe_tim_sim, 0.5, pt.pe_tim_ci * 1.5);
    EXPECT_NEAR(pt.pe_tim_ci, ci_halfwidth(pt.pe_tim_sim, 10000), 1e-15);
}

TEST(Simkit, HighPowerErrorIsSmall) {
    TimConfig cfg;
    cfg.trials = 20000;
    const std::vector<double> powers{100.0};
    const auto pt = run_tim_sweep(cfg, powers).front();
    EXPECT_LT(pt.pe_tim_sim, 1e-2 + pt.pe_tim_ci);
    EXPECT_NEAR(pt.pe_tim_sim, pt.pe_tim_bound, 3 * pt.pe_tim_ci);
}

TEST(Simkit, PaprNotBetterThanTim) {
    TimConfig cfg;
    cfg.trials = 20000;
    const std::vector<double> powers{0.1, 1.0, 10.0};
    SweepOptions opts;
    opts.papr = true;
    for (const auto& p : run_sweep(cfg, powers, opts))
        EXPECT_LE(p.pe_tim_sim, p.pe_papr_sim + 3 * std::hypot(p.pe_tim_ci, p.pe_papr_ci));
}

TEST(Simkit, InputErrors) {
    TimConfig cfg;
    const std::vector<double> powers{1.0};
    EXPECT_THROW(run_tim_sweep(cfg, {}), ConfigError);
    cfg.trials = 0;
    EXPECT_THROW(run_tim_sweep(cfg, powers), ConfigError);
    EXPECT_THROW(run_papr_sweep(cfg, powers), ConfigError);
    cfg.trials = 999;
    EXPECT_THROW(estimate_harvest(cfg), ConfigError);
    cfg.trials = 5000;
    const std::vector<double> negative{-1.0};
    EXPECT_THROW(run_tim_sweep(cfg, negative), ConfigError);
}

TEST(Simkit, HarvestEstimate) {
    TimConfig cfg;
    cfg.set = {4, 8, 16, 32};
    cfg.trials = 200000;
    const auto est = estimate_harvest(cfg);
    ASSERT_EQ(est.per_tone.size(), 4u);
    for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(est.per_tone[i] / harvested_energy(est.tones[i], cfg), 1.0, 0.05);
    EXPECT_EQ(estimate_harvest(cfg.with_power(0.0)).average, 0.0);
    auto k = cfg;
    k.samples_per_symbol = 413;
    k.noise_var = 5.0;
    EXPECT_EQ(estimate_harvest(k).per_tone, est.per_tone);
}

TEST(Simkit, MonteCarloOracleTrivialForms) {
    EigenSystem es;
    es.mu1 = 1.0;
    es.mu2 = 1.0;
    es.phi = 0.0;
    EXPECT_EQ(pairwise_mc_oracle(es, 100000, 1).value, 1.0);
    es.mu2 = -1.0;
    const auto half = pairwise_mc_oracle(es, 200000, 1, {2});
    EXPECT_NEAR(half.value, 0.5, half.ci_halfwidth);
    EXPECT_EQ(half.draws, 200000u);
    EXPECT_EQ(pairwise_mc_oracle(es, 200000, 1, {1}).value, half.value);
}

TEST(Simkit, PowerSweep) {
    const auto log = power_sweep(1e-2, 1e2, 17, SweepScale::log);
    ASSERT_EQ(log.size(), 17u);
    EXPECT_EQ(log.front(), 1e-2);
    EXPECT_EQ(log.back(), 1e2);
    EXPECT_NEAR(log[8], 1.0, 1e-12);
    const auto lin = power_sweep(0.0, 2.0, 3, SweepScale::linear);
    EXPECT_EQ(lin, (std::vector<double>{0.0, 1.0, 2.0}));
    EXPECT_THROW(power_sweep(0.0, 1.0, 5, SweepScale::log), ConfigError);
    EXPECT_THROW(power_sweep(1.0, 2.0, 0, SweepScale::log), ConfigError);
}

TEST(ParallelBlocks, OrderAndErrors) {
    const auto blocks = detail::run_blocks<std::uint64_t>(10, 3, 4, [](std::uint64_t a, std::uint64_t b) { return a * 100 + b; });
    EXPECT_EQ(blocks, (std::vector<std::uint64_t>{3, 306, 609, 910}));
    EXPECT_THROW(detail::run_blocks<int>(100, 1, 3,
                                         [](std::uint64_t a, std::uint64_t) -> int {
                                             if (a == 42) throw std::runtime_error("boom");
                                             return 0;
                                         }),
                 std::runtime_error);
}
