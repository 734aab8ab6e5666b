#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tim/analytics.hpp"
#include "tim/config.hpp"

namespace tim {

struct ExecutionPolicy {
    unsigned workers = 1;
};

/// One transmit-power point of an error/energy curve.
struct ErrorCurvePoint {
    double power = 0.0;
    double pe_tim_sim = 0.0;
    double pe_tim_ci = 0.0;  ///< 95% normal-approximation half-width
    double pe_tim_bound = 0.0;
    bool tim_bound_clipped = false;
    double pe_papr_sim = 0.0;
    double pe_papr_ci = 0.0;
    double pe_papr_analytic = 0.0;
    double q_analytic = 0.0;
    double q_sampled = 0.0;
    std::uint64_t trials = 0;
};

/// Which columns of ErrorCurvePoint a sweep fills in.
struct SweepOptions {
    bool tim = true;
    bool tim_bound = true;
    bool papr = false;
    bool papr_analytic = false;
    bool harvest = false;
    PaprCdfOptions papr_cdf{};
};

/// 1.96 sqrt(p (1 - p) / n).
double ci_halfwidth(double p, std::uint64_t n);

/// Monte Carlo sweep over transmit power. Symbols are drawn uniformly from the
/// set; trial t of point i uses stream (seed, i, t), so the TIM and PAPR
/// detectors see the same received symbols and results do not depend on the
/// number of workers. Throws ConfigError for trials < 1000 or no powers.
std::vector<ErrorCurvePoint> run_sweep(const TimConfig& cfg, std::span<const double> powers,
                                       const SweepOptions& opts, const ExecutionPolicy& exec = {});

/// TIM detection with the union bound alongside.
std::vector<ErrorCurvePoint> run_tim_sweep(const TimConfig& cfg, std::span<const double> powers,
                                           const ExecutionPolicy& exec = {});

/// PAPR detection with the analytic approximation alongside.
std::vector<ErrorCurvePoint> run_papr_sweep(const TimConfig& cfg, std::span<const double> powers,
                                            const ExecutionPolicy& exec = {});

struct HarvestEstimate {
    std::vector<int> tones;
    std::vector<double> per_tone;  ///< sampled Q_N, set order
    double average = 0.0;
};

/// Monte Carlo over cfg.trials channel draws of a2 h^2 <x^2> + a4 h^4 <x^4>,
/// with the noise-free passband moments from fine_passband_moments. Depends
/// on neither K nor the noise variance.
HarvestEstimate estimate_harvest(const TimConfig& cfg, const ExecutionPolicy& exec = {});

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    double ci_halfwidth = 0.0;
    std::uint64_t draws = 0;
};

/// Direct sampling of P{mu1 Z1 + mu2 Z2 > phi}, Z i.i.d. chi-square(1).
McEstimate pairwise_mc_oracle(const EigenSystem& es, std::uint64_t draws, std::uint64_t seed,
                              const ExecutionPolicy& exec = {});

enum class SweepScale { linear, log };

/// `points` powers from start to stop inclusive.
std::vector<double> power_sweep(double start, double stop, int points, SweepScale scale);

}  // namespace tim
