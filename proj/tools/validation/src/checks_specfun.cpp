#include <algorithm>
#include <cmath>
#include <vector>

#include "checks.hpp"
#include "tim/specfun.hpp"
#include "tim_validation/oracles.hpp"

namespace tim::validation::detail {
namespace {

struct Tally {
    int points = 0;
    double worst = 0.0;
    double worst_at_a = 0.0;
    double worst_at_b = 0.0;

    void add(double dev, double a, double b = 0.0) {
        ++points;
        if (dev > worst || std::isnan(dev)) {
            worst = std::isnan(dev) ? INFINITY : dev;
            worst_at_a = a;
            worst_at_b = b;
        }
    }
};

std::vector<double> linspace(double a, double b, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = a + (b - a) * i / (n - 1);
    return v;
}

double rel(double got, double want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

void special_functions(Reporter& r) {
    Tally g;
    for (double x : linspace(0.1, 20.0, 60)) g.add(rel(specfun::gamma(x), oracle::gamma(x)), x);
    r.check("gamma vs Euler integral", g.worst <= r.tol(1e-13),
            fmt("%d points in [0.1, 20], max rel %.2e at x=%g (tol 1e-13)", g.points, g.worst, g.worst_at_a));

    Tally lg;
    for (double a : {0.5, 1.0, 1.5, 2.5, 5.0, 10.0})
        for (double x : {1e-3, 0.05, 0.3, 0.9, 1.0, 1.1, 2.0, 3.4, 6.0, 11.0, 20.0, 40.0})
            lg.add(rel(specfun::lower_incomplete_gamma(a, x), oracle::lower_incomplete_gamma(a, x)), a, x);
    r.check("lower incomplete gamma vs quadrature", lg.worst <= r.tol(1e-12),
            fmt("%d points, max rel %.2e at a=%g x=%g (tol 1e-12)", lg.points, lg.worst, lg.worst_at_a, lg.worst_at_b));

    // regime switches at x = 1 and x = a + 1
    Tally sw;
    for (double a : {0.5, 1.5, 2.5, 5.0}) {
        for (double edge : {1.0, a + 1.0}) {
            const double below = specfun::lower_incomplete_gamma(a, std::nextafter(edge, 0.0));
            const double above = specfun::lower_incomplete_gamma(a, std::nextafter(edge, 100.0));
            sw.add(rel(below, above), a, edge);
        }
    }
    r.check("lower incomplete gamma continuous across regime switches", sw.worst <= r.tol(1e-12),
            fmt("%d switch points, max rel jump %.2e (tol 1e-12)", sw.points, sw.worst));

    Tally e;
    for (double x : linspace(-3.0, 6.0, 61))
        e.add(std::abs(static_cast<long double>(specfun::erfc(x)) - oracle::erfc(x)), x);
    r.check("erfc vs extended-precision quadrature", e.worst <= r.tol(1e-14),
            fmt("%d points in [-3, 6], max abs %.2e at x=%g (tol 1e-14)", e.points, e.worst, e.worst_at_a));

    Tally q;
    for (double a : linspace(0.0, 5.0, 8))
        for (double b : linspace(0.0, 7.0, 8))
            q.add(std::abs(specfun::marcum_q_half(a, b) - oracle::noncentral_chi1_tail(a, b)), a, b);
    r.check("Marcum Q_1/2 erfc form vs non-central chi-square tail", q.worst <= r.tol(1e-9),
            fmt("%d points, max abs %.2e at a=%g b=%g (tol 1e-9)", q.points, q.worst, q.worst_at_a, q.worst_at_b));

    Tally u;
    for (int j = 0; j < 10; ++j)
        for (double x : {0.0, 0.01, 0.1, 0.5, 1.0, 2.0, 5.0, 10.0, 50.0, 100.0})
            u.add(rel(specfun::tricomi_u_half(j, x), oracle::tricomi_u_half(j, x)), j, x);
    r.check("Tricomi U(1/2, -j, x) vs t-form integral", u.worst <= r.tol(1e-10),
            fmt("%d points, max rel %.2e at j=%g x=%g (tol 1e-10)", u.points, u.worst, u.worst_at_a, u.worst_at_b));
}

}  // namespace tim::validation::detail
