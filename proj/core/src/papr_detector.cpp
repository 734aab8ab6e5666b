#include "tim/papr_detector.hpp"

#include <cmath>

#include "tim/error.hpp"

namespace tim {

double papr(std::span<const double> r) {
    if (r.empty()) throw DimensionError("papr: empty symbol");
    double peak = 0.0;
    double sum = 0.0;
    for (double v : r) {
        const double p = v * v;
        if (p > peak) peak = p;
        sum += p;
    }
    if (sum == 0.0) throw DomainError("papr: all-zero symbol has undefined PAPR");
    return peak / (sum / static_cast<double>(r.size()));
}

double papr(const ReceivedSymbol& r) { return papr(r.view()); }

std::vector<double> decision_boundaries(std::span<const int> set) {
    if (set.size() < 2) throw ConfigError("set", "PAPR decision regions need at least two tone counts");
    std::vector<double> d(set.size() - 1);
    for (std::size_t i = 0; i + 1 < set.size(); ++i) {
        if (set[i + 1] <= set[i]) throw ConfigError("set", "tone counts must be ascending");
        d[i] = 0.5 * (set[i] + set[i + 1]);
    }
    return d;
}

int detect_papr(double value, std::span<const int> set) {
    if (set.empty()) throw ConfigError("set", "empty tone set");
    if (!std::isfinite(value)) throw DomainError("detect_papr: non-finite statistic");
    int best = set[0];
    double best_dist = std::abs(value - set[0]);
    for (std::size_t i = 1; i < set.size(); ++i) {
        const double d = std::abs(value - set[i]);
        if (d < best_dist) {
            best = set[i];
            best_dist = d;
        }
    }
    return best;
}

}  // namespace tim
