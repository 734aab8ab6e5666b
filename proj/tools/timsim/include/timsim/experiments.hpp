#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "tim/simkit.hpp"
#include "timsim/config_file.hpp"
#include "timsim/csv.hpp"

namespace timsim {

/// One curve of a figure: a tone set at a (nstar, K) configuration.
struct CurveSpec {
    std::vector<int> set;
    int nstar = 32;
    int samples_per_symbol = 31;

    std::string name() const;  ///< e.g. "S4-8_N32_K31"
};

struct Curve {
    CurveSpec spec;
    tim::TimConfig config;
    std::vector<tim::ErrorCurvePoint> points;
    double rate_bits_per_sec = 0.0;
};

struct Experiment {
    std::string name;  ///< fig3, fig4 or sweep
    std::vector<std::string> columns;
    std::vector<Curve> curves;
};

std::vector<CurveSpec> fig3_curves();
std::vector<CurveSpec> fig4_curves();

const std::vector<std::string>& fig3_columns();
const std::vector<std::string>& full_columns();

/// Error-probability curves for {4,8} and {4,8,16,32} at (32, 31) and (128, 127).
Experiment run_fig3(const RunConfig& cfg);
/// Error and harvested energy for {4,8}, {16,32}, {4,8,16,32} at nstar 32, K 31 and 413.
Experiment run_fig4(const RunConfig& cfg);
/// One curve using the set, nstar and K of the config.
Experiment run_single_sweep(const RunConfig& cfg);

CsvTable to_table(const Experiment& exp, const Curve& curve);

struct WriteOptions {
    bool plot_script = false;
};

/// Writes <name>_<curve>.csv per curve and manifest.json into `dir` (created
/// if missing). Returns the CSV paths. Throws ConfigError("out") on I/O failure.
std::vector<std::filesystem::path> write_experiment(const Experiment& exp, const RunConfig& cfg,
                                                    const std::filesystem::path& dir, const WriteOptions& opts = {});

}  // namespace timsim
