#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "tim/analytics.hpp"
#include "tim/config.hpp"
#include "tim/simkit.hpp"

namespace timsim {

/// Everything a run reads from a config file or the command line.
struct RunConfig {
    tim::TimConfig tim{};
    double sweep_start = 1e-2;
    double sweep_stop = 1e2;
    int sweep_points = 17;
    tim::SweepScale sweep_scale = tim::SweepScale::log;
    unsigned workers = 1;
    tim::PaprCdfOptions papr{};

    std::vector<double> powers() const;
    /// Throws ConfigError on the first invalid field.
    void validate() const;
};

/// Sets one key. Keys mirror the RunConfig / TimConfig fields; unknown keys
/// and malformed values throw ConfigError naming the key.
void apply_setting(RunConfig& cfg, std::string_view key, std::string_view value);

/// Parses flat `key = value` lines; `#` starts a comment. Later keys win.
RunConfig parse_config(std::string_view text, RunConfig base = {});

RunConfig load_config(const std::filesystem::path& path, RunConfig base = {});

/// The same text format, with every key, as parse_config accepts.
std::string format_config(const RunConfig& cfg);

}  // namespace timsim
