#pragma once

#include <span>
#include <vector>

#include "tim/channel.hpp"

namespace tim {

/// max_k r[k]^2 / mean_k r[k]^2 over the K samples of one symbol.
double papr(std::span<const double> r);
double papr(const ReceivedSymbol& r);

/// Midpoints d_i = (s_i + s_{i+1}) / 2 of an ascending tone set.
std::vector<double> decision_boundaries(std::span<const int> set);

/// Nearest tone count to `value`; equidistant values go to the smaller one.
int detect_papr(double value, std::span<const int> set);

}  // namespace tim
