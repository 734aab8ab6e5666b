#include "tim/config.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "tim/error.hpp"

namespace tim {

void TimConfig::validate() const {
    if (set.empty()) throw ConfigError("set", "tone set is empty");
    for (std::size_t i = 0; i < set.size(); ++i) {
        if (set[i] < 2) throw ConfigError("set", "tone counts must be >= 2, got " + std::to_string(set[i]));
        if (i > 0 && set[i] <= set[i - 1])
            throw ConfigError("set", "tone counts must be distinct and ascending");
    }
    if (nstar < set.back())
        throw ConfigError("nstar", "reference tone count must be >= max(set) = " + std::to_string(set.back()));
    if (samples_per_symbol < 1) throw ConfigError("samples_per_symbol", "must be >= 1");
    if (!(power >= 0.0) || !std::isfinite(power)) throw ConfigError("power", "must be finite and >= 0");
    if (!(channel_var > 0.0) || !std::isfinite(channel_var)) throw ConfigError("channel_var", "must be > 0");
    if (!(noise_var > 0.0) || !std::isfinite(noise_var)) throw ConfigError("noise_var", "must be > 0");
    if (!(bandwidth_hz > 0.0) || !std::isfinite(bandwidth_hz)) throw ConfigError("bandwidth_hz", "must be > 0");
    if (!(rectenna.a2 >= 0.0)) throw ConfigError("a2", "must be >= 0");
    if (!(rectenna.a4 >= 0.0)) throw ConfigError("a4", "must be >= 0");
}

TimConfig TimConfig::with_power(double p) const {
    TimConfig copy = *this;
    copy.power = p;
    return copy;
}

}  // namespace tim
