#include "tim/quadrature.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

#include <Eigen/Eigenvalues>

#include "tim/error.hpp"

namespace tim::quadrature {
namespace {

// Golub-Welsch eigenvalues of the Jacobi matrix as starting points, then
// Newton on the orthonormal Hermite recurrence for the nodes and weights.
HermiteRule build_hermite(int n) {
    const double pim4 = std::pow(std::numbers::pi, -0.25);
    std::vector<double> x(static_cast<std::size_t>(n));
    std::vector<double> w(static_cast<std::size_t>(n));

    Eigen::VectorXd diag = Eigen::VectorXd::Zero(n);
    Eigen::VectorXd sub(std::max(n - 1, 0));
    for (int j = 1; j < n; ++j) sub[j - 1] = std::sqrt(0.5 * j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> jacobi;
    jacobi.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    const Eigen::VectorXd& guess = jacobi.eigenvalues();  // ascending

    const int m = (n + 1) / 2;
    double z = 0.0;
    for (int i = 0; i < m; ++i) {
        z = guess[n - 1 - i];
        if (n % 2 == 1 && i == m - 1) z = 0.0;
        // The polynomial alone overflows near the outer nodes for large n, so
        // the recurrence is rescaled on the fly and the weight kept in logs.
        double pp = 0.0;
        double log_scale = 0.0;
        bool done = false;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = pim4;
            double p2 = 0.0;
            log_scale = 0.0;
            for (int j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = z * std::sqrt(2.0 / j) * p2 - std::sqrt((j - 1.0) / j) * p3;
                if (std::abs(p1) > 1e150) {
                    p1 *= 1e-150;
                    p2 *= 1e-150;
                    log_scale += 150.0 * std::numbers::ln10;
                }
            }
            pp = std::sqrt(2.0 * n) * p2;
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) <= 4e-15 * std::max(1.0, std::abs(z))) {
                done = true;
                break;
            }
        }
        if (!done) throw Error("gauss_hermite: Newton iteration did not converge for n = " + std::to_string(n));
        const double weight = std::exp(std::log(2.0) - 2.0 * (std::log(std::abs(pp)) + log_scale));
        x[static_cast<std::size_t>(i)] = z;
        x[static_cast<std::size_t>(n - 1 - i)] = -z;
        w[static_cast<std::size_t>(i)] = weight;
        w[static_cast<std::size_t>(n - 1 - i)] = w[static_cast<std::size_t>(i)];
    }
    HermiteRule rule;
    rule.nodes.assign(x.rbegin(), x.rend());
    rule.weights.assign(w.rbegin(), w.rend());
    return rule;
}

}  // namespace

const HermiteRule& gauss_hermite(int n) {
    if (n < 1 || n > 4096) throw DomainError("gauss_hermite: order out of range");
    static std::mutex mutex;
    static std::map<int, std::unique_ptr<const HermiteRule>> cache;
    std::lock_guard lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<const HermiteRule>(build_hermite(n));
    return *slot;
}

}  // namespace tim::quadrature
