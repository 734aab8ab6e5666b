#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace tim::quadrature {

struct Result {
    double value = 0.0;
    double abs_error = 0.0;
    int intervals = 0;
    bool converged = false;
};

struct Control {
    double abs_tol = 1e-14;
    double rel_tol = 1e-12;
    int max_intervals = 4000;
};

namespace detail {

// 15-point Kronrod extension of the 7-point Gauss rule on [-1, 1].
inline constexpr std::array<double, 8> kKronrodNodes{
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
inline constexpr std::array<double, 8> kKronrodWeights{
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
inline constexpr std::array<double, 4> kGaussWeights{
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment kronrod15(F& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double kronrod = fc * kKronrodWeights[7];
    double gauss = fc * kGaussWeights[3];
    for (int i = 0; i < 7; ++i) {
        const double dx = h * kKronrodNodes[i];
        const double pair = f(c - dx) + f(c + dx);
        kronrod += kKronrodWeights[i] * pair;
        if (i % 2 == 1) gauss += kGaussWeights[i / 2] * pair;
    }
    kronrod *= h;
    gauss *= h;
    return {a, b, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Globally adaptive Gauss-Kronrod (G7/K15) quadrature of f over [a, b].
///
/// The segment with the largest error estimate is bisected until the summed
/// estimate meets max(abs_tol, rel_tol |I|) or the interval budget is spent.
template <class F>
Result integrate(F&& f, double a, double b, const Control& ctl = {}) {
    if (a == b) return {0.0, 0.0, 0, true};
    std::priority_queue<detail::Segment> heap;
    auto first = detail::kronrod15(f, a, b);
    double value = first.value;
    double error = first.error;
    heap.push(first);
    int intervals = 1;
    while (error > std::max(ctl.abs_tol, ctl.rel_tol * std::abs(value)) && intervals < ctl.max_intervals) {
        const auto worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval exhausted at double resolution; keep its estimate
            heap.push({worst.a, worst.b, worst.value, 0.0});
            error -= worst.error;
            continue;
        }
        const auto left = detail::kronrod15(f, worst.a, mid);
        const auto right = detail::kronrod15(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++intervals;
    }
    // Re-sum from the segments to shed accumulated update rounding.
    double total = 0.0;
    double total_err = 0.0;
    while (!heap.empty()) {
        total += heap.top().value;
        total_err += heap.top().error;
        heap.pop();
    }
    return {total, total_err, intervals, total_err <= std::max(ctl.abs_tol, ctl.rel_tol * std::abs(total))};
}

/// Gauss-Hermite rule for the weight exp(-x^2) on the real line.
struct HermiteRule {
    std::vector<double> nodes;    ///< ascending
    std::vector<double> weights;  ///< sum to sqrt(pi)
};

/// n-point rule, computed once per n and cached; the returned reference stays
/// valid for the life of the program. Thread-safe.
const HermiteRule& gauss_hermite(int n);

}  // namespace tim::quadrature
