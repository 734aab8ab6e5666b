#include "tim_validation/oracles.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/bessel.hpp>

namespace tim::oracle {

Eigen::MatrixXd covariance(const MultisineWaveform& x, const TimConfig& cfg) {
    const auto v = Eigen::Map<const Eigen::VectorXd>(x.samples.data(), static_cast<Eigen::Index>(x.size()));
    Eigen::MatrixXd r = cfg.channel_var * v * v.transpose();
    r.diagonal().array() += cfg.noise_var;
    return r;
}

double dense_log_likelihood(std::span<const double> r, const MultisineWaveform& x, const TimConfig& cfg) {
    if (r.size() != x.size()) throw std::invalid_argument("dense_log_likelihood: length mismatch");
    const Eigen::LLT<Eigen::MatrixXd> llt(covariance(x, cfg));
    const auto v = Eigen::Map<const Eigen::VectorXd>(r.data(), static_cast<Eigen::Index>(r.size()));
    const Eigen::VectorXd y = llt.matrixL().solve(v);
    const double log_det = 2.0 * llt.matrixL().toDenseMatrix().diagonal().array().log().sum();
    const double k = static_cast<double>(r.size());
    return -0.5 * (k * std::log(2.0 * std::numbers::pi) + log_det + y.squaredNorm());
}

DensePairwise dense_pairwise(const MultisineWaveform& from, const MultisineWaveform& to, const TimConfig& cfg) {
    const Eigen::MatrixXd ri = covariance(from, cfg);
    const Eigen::MatrixXd rj = covariance(to, cfg);
    const auto k = ri.rows();
    const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(k, k);
    Eigen::MatrixXd w = ri.llt().solve(id) - rj.llt().solve(id);
    w = 0.5 * (w + w.transpose());

    DensePairwise out;
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ew(w);
    out.w_eigenvalues = ew.eigenvalues();
    out.w_norm = out.w_eigenvalues.cwiseAbs().maxCoeff();
    for (Eigen::Index i = 0; i < k; ++i)
        if (std::abs(out.w_eigenvalues[i]) > 1e-12 * out.w_norm) ++out.significant;
    out.lambda_neg = out.w_eigenvalues[0];
    out.lambda_pos = out.w_eigenvalues[k - 1];

    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> er(ri);
    const Eigen::MatrixXd root = er.eigenvectors() * er.eigenvalues().cwiseSqrt().asDiagonal() * er.eigenvectors().transpose();
    Eigen::MatrixXd m = root * w * root;
    m = 0.5 * (m + m.transpose());
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> em(m, Eigen::EigenvaluesOnly);
    out.mu_neg = em.eigenvalues()[0];
    out.mu_pos = em.eigenvalues()[k - 1];
    out.mu_norm = em.eigenvalues().cwiseAbs().maxCoeff();
    return out;
}

double gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("oracle::gamma: x must be > 0");
    boost::math::quadrature::tanh_sinh<double> ts;
    boost::math::quadrature::exp_sinh<double> es;
    auto f = [x](double t) { return t <= 0.0 ? 0.0 : std::exp((x - 1.0) * std::log(t) - t); };
    return ts.integrate(f, 0.0, 1.0) + es.integrate(f, 1.0, std::numeric_limits<double>::infinity());
}

double lower_incomplete_gamma(double a, double x) {
    if (!(a > 0.0) || x < 0.0) throw std::domain_error("oracle::lower_incomplete_gamma: bad arguments");
    if (x == 0.0) return 0.0;
    boost::math::quadrature::tanh_sinh<double> ts;
    // t = x u^(1/a) removes the endpoint singularity: gamma(a, x) = (x^a / a) int_0^1 e^(-x u^(1/a)) du
    auto f = [a, x](double u) { return std::exp(-x * std::pow(u, 1.0 / a)); };
    return std::pow(x, a) / a * ts.integrate(f, 0.0, 1.0);
}

long double erfc(long double x) {
    if (x < 0.0L) return 2.0L - erfc(-x);
    boost::math::quadrature::exp_sinh<long double> es;
    auto f = [](long double t) { return std::exp(-t * t); };
    const long double tail = es.integrate(f, x, std::numeric_limits<long double>::infinity());
    return 2.0L / std::sqrt(std::numbers::pi_v<long double>) * tail;
}

double noncentral_chi1_tail(double a, double b) {
    if (a < 0.0 || b < 0.0) throw std::domain_error("oracle::noncentral_chi1_tail: negative argument");
    const double lambda = a * a;
    // density of Y = (Z + a)^2 is (1/2) e^{-(y + lambda)/2} (y/lambda)^{-1/4} I_{-1/2}(sqrt(lambda y));
    // integrated in s = sqrt(y) over [b, inf)
    auto density_s = [a, lambda](double s) {
        if (s <= 0.0) return 0.0;
        const double y = s * s;
        if (lambda == 0.0) return 2.0 * std::exp(-0.5 * y) / std::sqrt(2.0 * std::numbers::pi);
        const double z = a * s;
        if (z > 600.0 || y > 1500.0) return 0.0;
        const double decay = std::exp(-0.5 * (y + lambda));
        // s (y/lambda)^{-1/4} = sqrt(s) lambda^{1/4}; small z uses I_{-1/2}(z) ~ sqrt(2/(pi z))
        if (z < 1e-100) return decay * std::pow(lambda, 0.25) * std::sqrt(2.0 / (std::numbers::pi * a));
        return std::sqrt(s) * std::pow(lambda, 0.25) * decay * boost::math::cyl_bessel_i(-0.5, z);
    };
    boost::math::quadrature::exp_sinh<double> es;
    boost::math::quadrature::tanh_sinh<double> ts;
    // split near the mode so exp_sinh sees a decaying tail
    const double knee = std::max(b, a + 8.0);
    double total = es.integrate(density_s, knee, std::numeric_limits<double>::infinity());
    if (knee > b) total += ts.integrate(density_s, b, knee);
    return total;
}

double tricomi_u_half(int j, double x) {
    if (j < 0 || x < 0.0) throw std::domain_error("oracle::tricomi_u_half: bad arguments");
    // t = s^2
    auto f = [j, x](double s) { return std::exp(-x * s * s - (j + 1.5) * std::log1p(s * s)); };
    boost::math::quadrature::exp_sinh<double> es;
    return 2.0 / std::sqrt(std::numbers::pi) * es.integrate(f, 0.0, std::numeric_limits<double>::infinity());
}

PassbandMoments brute_passband_moments(int tones, double power, int points) {
    const double amp = std::sqrt(2.0 * power / tones);
    long double m2 = 0.0L;
    long double m4 = 0.0L;
    for (int i = 0; i < points; ++i) {
        const double phase = 2.0 * std::numbers::pi * (i + 0.5) / points;  // delta_f t over one period
        double x = 0.0;
        for (int n = 0; n < tones; ++n) x += amp * std::cos((tones + n) * phase);
        const double x2 = x * x;
        m2 += x2;
        m4 += x2 * x2;
    }
    return {static_cast<double>(m2 / points), static_cast<double>(m4 / points)};
}

}  // namespace tim::oracle
