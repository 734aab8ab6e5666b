#pragma once

#include <span>

#include <Eigen/Dense>

#include "tim/config.hpp"
#include "tim/waveform.hpp"

// Reference implementations that share no numerics with tim::core: dense
// K x K linear algebra and Boost.Math quadrature.
namespace tim::oracle {

/// R = sn2 I + sh2 x x^T.
Eigen::MatrixXd covariance(const MultisineWaveform& x, const TimConfig& cfg);

/// log N(r; 0, R) through a Cholesky factorization.
double dense_log_likelihood(std::span<const double> r, const MultisineWaveform& x, const TimConfig& cfg);

struct DensePairwise {
    Eigen::VectorXd w_eigenvalues;  ///< ascending
    double w_norm = 0.0;            ///< spectral norm of W
    int significant = 0;            ///< eigenvalues above 1e-12 ||W||
    double lambda_pos = 0.0;
    double lambda_neg = 0.0;
    double mu_pos = 0.0;            ///< extreme eigenvalues of R^{1/2} W R^{1/2}
    double mu_neg = 0.0;
    double mu_norm = 0.0;
};

/// W = R_i^{-1} - R_j^{-1} formed and diagonalized densely.
DensePairwise dense_pairwise(const MultisineWaveform& from, const MultisineWaveform& to, const TimConfig& cfg);

/// int_0^inf t^(x-1) e^-t dt.
double gamma(double x);
/// int_0^x t^(a-1) e^-t dt.
double lower_incomplete_gamma(double a, double x);
/// (2/sqrt(pi)) int_x^inf e^(-t^2) dt in extended precision.
long double erfc(long double x);
/// Tail of the one-degree-of-freedom non-central chi-square with
/// non-centrality a^2, beyond b^2, integrated from its Bessel-I density.
double noncentral_chi1_tail(double a, double b);
/// (1/sqrt(pi)) int_0^inf e^(-x t) t^(-1/2) (1 + t)^(-j - 3/2) dt.
double tricomi_u_half(int j, double x);
/// Time averages of x(t)^2 and x(t)^4 of the passband multisine by brute
/// force sampling of `points` instants over one period.
PassbandMoments brute_passband_moments(int tones, double power, int points);

}  // namespace tim::oracle
