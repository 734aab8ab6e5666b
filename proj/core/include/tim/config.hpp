#pragma once

#include <cstdint>
#include <vector>

namespace tim {

/// Rectifier polynomial constants of the DC harvesting model.
struct RectennaParams {
    double a2 = 0.0034;
    double a4 = 0.3829;
};

/// Full parameterization of one tone-index experiment.
///
/// `set` holds the admissible tone counts in ascending order. The symbol time
/// is fixed by the reference tone count: T = (nstar - 1) / bandwidth_hz.
struct TimConfig {
    std::vector<int> set{4, 8};
    double bandwidth_hz = 1000.0;
    int nstar = 32;
    int samples_per_symbol = 31;
    double power = 1.0;
    double channel_var = 1.0;
    double noise_var = 1.0;
    RectennaParams rectenna{};
    std::uint64_t seed = 1;
    std::uint64_t trials = 100000;

    /// Throws ConfigError naming the first violated field.
    void validate() const;

    double symbol_time() const { return (nstar - 1) / bandwidth_hz; }

    /// Copy with a different transmit power.
    TimConfig with_power(double p) const;
};

}  // namespace tim
