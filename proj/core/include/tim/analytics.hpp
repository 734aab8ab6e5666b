#pragma once

#include <vector>

#include "tim/config.hpp"
#include "tim/specfun.hpp"
#include "tim/waveform.hpp"

namespace tim {

/// Spectral data of the pairwise test between hypotheses i (sent) and j.
///
/// W_ij = R_i^{-1} - R_j^{-1} = Q_j - Q_i has rank two on span{x_i, x_j}.
/// The pairwise error event is zeta^T R_i^{T/2} W_ij R_i^{1/2} zeta > phi with
/// zeta ~ N(0, I), i.e. mu1 Z1 + mu2 Z2 > phi for Z's i.i.d. chi-square(1).
///
/// Sign layout: lambda1, mu1 > 0 > lambda2, mu2. mu1/mu2 are the exact
/// eigenvalues of W_ij R_i; lemma_mu1 = sn2 lambda1 and
/// lemma_mu2 = (sn2 + sh2 |x_i|^2) lambda2 are the product forms that hold
/// when x_i and x_j are orthogonal, kept for comparison.
struct EigenSystem {
    int from_tones = 0;
    int to_tones = 0;
    double lambda1 = 0.0;
    double lambda2 = 0.0;
    double mu1 = 0.0;
    double mu2 = 0.0;
    double lemma_mu1 = 0.0;
    double lemma_mu2 = 0.0;
    double phi = 0.0;  ///< log(|R_j| / |R_i|)
};

/// 2x2 reduction on span{x_i, x_j}; throws RankDeficiencyError for parallel
/// (or zero) waveforms.
EigenSystem eigensystem(const MultisineWaveform& from, const MultisineWaveform& to, const TimConfig& cfg);

/// P{mu1 Z1 + mu2 Z2 > phi} as the one-dimensional integral
///   1/(pi sqrt 2) int_{z0}^inf gamma(1/2, (mu1 z - phi)/(2|mu2|)) e^{-z/2} z^{-1/2} dz,
/// z0 = max(0, phi/mu1), evaluated after z = w^2 by adaptive Gauss-Kronrod.
/// This is the reference evaluation path.
double pairwise_error_integral(const EigenSystem& es);

struct SeriesResult {
    double value = 0.0;
    bool converged = false;
    int terms = 0;
    std::vector<double> partial_sums;
};

/// Closed-form series in Gamma(j + 3/2) U(1/2, -j, z0/2) with ratio
/// rho = mu1/|mu2|. Converges geometrically for rho < 1; otherwise the terms
/// grow and `converged` is false (no exception).
SeriesResult pairwise_error_series(const EigenSystem& es, const specfun::SeriesControl& ctl = {});

struct UnionBound {
    double value = 0.0;  ///< clipped to [0, 1]
    double raw = 0.0;    ///< before clipping
    bool clipped = false;
};

/// (1/|S|) sum_i sum_{j != i} P{x_i -> x_j}, each term from the integral path.
/// At zero power all hypotheses coincide and each pairwise term follows the
/// detector's tie rule (errs toward every smaller tone count).
UnionBound tim_union_bound(const TimConfig& cfg);

enum class ChannelAveraging {
    joint,       ///< E_h{ prod_k (1 - Q_k(h)) }: samples independent given h
    per_sample,  ///< prod_k (1 - E_h{Q_k(h)}): literal displayed form
};

enum class PaprNormalization {
    expected_power,  ///< statistic max r^2 / (h^2 xi + sn2) compared with theta
    noise_scaled,    ///< same statistic compared with theta / sn2
};

struct PaprCdfOptions {
    ChannelAveraging averaging = ChannelAveraging::joint;
    PaprNormalization normalization = PaprNormalization::expected_power;
    int initial_order = 64;
    int max_order = 1024;
    double tolerance = 1e-8;
};

struct PaprCdfResult {
    double value = 0.0;
    int order = 0;
    bool converged = false;
};

/// Approximate CDF of the N-tone PAPR at threshold theta, the sample mean power
/// being replaced by its conditional expectation h^2 xi + sn2. The Gaussian
/// average over h uses Gauss-Hermite on the even integrand, doubling the
/// order until two successive estimates differ by at most `tolerance`.
PaprCdfResult papr_cdf_detailed(double theta, const MultisineWaveform& x, const TimConfig& cfg,
                                const PaprCdfOptions& opts = {});
double papr_cdf(double theta, const MultisineWaveform& x, const TimConfig& cfg, const PaprCdfOptions& opts = {});
double papr_cdf(double theta, int tones, const TimConfig& cfg, const PaprCdfOptions& opts = {});

struct PaprErrorResult {
    double value = 0.0;
    std::vector<double> per_symbol;  ///< p_i in set order
};

/// Average error of the nearest-level PAPR demodulator; each region
/// probability uses the CDF of the transmitted tone count.
PaprErrorResult papr_error_prob(const TimConfig& cfg, const PaprCdfOptions& opts = {});

/// Q_N = a2 sh2 P + 3 a4 sh2^2 (2N^2 + 1)/(2N) P^2.
double harvested_energy(int tones, const TimConfig& cfg);

struct Tradeoff {
    double rate_bits_per_sec = 0.0;
    double avg_energy = 0.0;          ///< exact mean of Q_N over the set
    double avg_energy_large_n = 0.0;  ///< a2 sh2 P + 3 a4 sh2^2 P^2 mean(N)
};

Tradeoff tradeoff(const TimConfig& cfg);

}  // namespace tim
