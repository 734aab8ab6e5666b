#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "tim/error.hpp"
#include "tim_validation/suite.hpp"
#include "timsim/config_file.hpp"
#include "timsim/experiments.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kValidationFailed = 1;
constexpr int kUsage = 2;

struct Common {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> trials;
    std::optional<unsigned> workers;
    std::string out = "results";
};

void add_common(CLI::App& cmd, Common& c, bool with_trials) {
    cmd.add_option("--config", c.config, "flat key = value config file")->check(CLI::ExistingFile);
    cmd.add_option("--seed", c.seed, "base seed of the per-trial random streams");
    if (with_trials) cmd.add_option("--trials", c.trials, "Monte Carlo trials per sweep point (>= 1000)");
    cmd.add_option("--workers", c.workers, "worker threads (results do not depend on it)")->check(CLI::PositiveNumber);
    cmd.add_option("--out", c.out, "output directory");
}

timsim::RunConfig resolve(const Common& c) {
    timsim::RunConfig cfg;
    if (!c.config.empty()) cfg = timsim::load_config(c.config);
    if (c.seed) cfg.tim.seed = *c.seed;
    if (c.trials) cfg.tim.trials = *c.trials;
    if (c.workers) cfg.workers = *c.workers;
    cfg.validate();
    return cfg;
}

int run_experiment(const Common& c, bool plot, timsim::Experiment (*run)(const timsim::RunConfig&)) {
    const auto cfg = resolve(c);
    const auto exp = run(cfg);
    const auto files = timsim::write_experiment(exp, cfg, c.out, {plot});
    for (const auto& f : files) std::cout << f.string() << '\n';
    std::cout << (std::filesystem::path(c.out) / "manifest.json").string() << '\n';
    return kOk;
}

int run_validate(const Common& c, const std::vector<int>& only, double tolerance_scale) {
    const auto cfg = resolve(c);
    tim::validation::SuiteOptions opts;
    opts.only.insert(only.begin(), only.end());
    opts.tolerance_scale = tolerance_scale;
    opts.workers = cfg.workers;
    opts.seed = cfg.tim.seed;
    opts.on_check = [](const tim::validation::Check& chk) {
        const char* tag = chk.informational ? "INFO" : (chk.passed ? "PASS" : "FAIL");
        std::cout << tag << " [" << chk.criterion << "] " << chk.name << ": " << chk.detail << std::endl;
    };
    const auto checks = tim::validation::run_suite(opts);
    int failed = 0;
    std::cout << "\nsummary\n";
    for (const auto& crit : tim::validation::criteria()) {
        if (!opts.only.empty() && !opts.only.count(crit.id)) continue;
        const bool ok = tim::validation::passed(checks, crit.id);
        failed += ok ? 0 : 1;
        std::cout << (ok ? "PASS" : "FAIL") << " criterion " << crit.id << ": " << crit.title << '\n';
    }
    return failed == 0 ? kOk : kValidationFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tone-index multisine SWIPT link simulator"};
    app.require_subcommand(1);

    Common c3, c4, cs, cv;
    bool plot3 = false, plot4 = false, plots = false;
    auto* fig3 = app.add_subcommand("fig3", "error probability of TIM and PAPR detection, two sets at two (N*, K)");
    add_common(*fig3, c3, true);
    fig3->add_flag("--plot-script", plot3, "also write a matplotlib script");
    auto* fig4 = app.add_subcommand("fig4", "error and harvested energy for three sets at K = 31 and 413");
    add_common(*fig4, c4, true);
    fig4->add_flag("--plot-script", plot4, "also write a matplotlib script");
    auto* sweep = app.add_subcommand("sweep", "one power sweep with the configured set, N* and K");
    add_common(*sweep, cs, true);
    sweep->add_flag("--plot-script", plots, "also write a matplotlib script");
    auto* validate = app.add_subcommand("validate", "run the invariant and acceptance checks");
    add_common(*validate, cv, false);
    std::vector<int> only;
    double tolerance_scale = 1.0;
    validate->add_option("--only", only, "criterion numbers to run (default: all)")->check(CLI::Range(1, 10));
    validate->add_option("--tolerance-scale", tolerance_scale, "multiply every tolerance")->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*fig3) return run_experiment(c3, plot3, timsim::run_fig3);
        if (*fig4) return run_experiment(c4, plot4, timsim::run_fig4);
        if (*sweep) return run_experiment(cs, plots, timsim::run_single_sweep);
        if (*validate) return run_validate(cv, only, tolerance_scale);
    } catch (const tim::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
