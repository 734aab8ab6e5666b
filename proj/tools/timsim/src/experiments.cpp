#include "timsim/experiments.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

#include "tim/error.hpp"

namespace timsim {
namespace {

std::vector<Curve> run_curves(const RunConfig& cfg, const std::vector<CurveSpec>& specs, bool harvest) {
    cfg.validate();
    const auto powers = cfg.powers();
    tim::SweepOptions opts;
    opts.tim = true;
    opts.tim_bound = true;
    opts.papr = true;
    opts.papr_analytic = true;
    opts.harvest = harvest;
    opts.papr_cdf = cfg.papr;
    const tim::ExecutionPolicy exec{cfg.workers};

    std::vector<Curve> curves;
    for (const auto& spec : specs) {
        Curve c;
        c.spec = spec;
        c.config = cfg.tim;
        c.config.set = spec.set;
        c.config.nstar = spec.nstar;
        c.config.samples_per_symbol = spec.samples_per_symbol;
        c.points = tim::run_sweep(c.config, powers, opts, exec);
        c.rate_bits_per_sec = tim::tradeoff(c.config).rate_bits_per_sec;
        curves.push_back(std::move(c));
    }
    return curves;
}

const char* kPlotScript = R"(# Generated by timsim. Reads manifest.json next to this file.
import json, pathlib
import matplotlib.pyplot as plt
import pandas as pd

here = pathlib.Path(__file__).resolve().parent
manifest = json.loads((here / "manifest.json").read_text())
fig, ax = plt.subplots()
for curve in manifest["curves"]:
    df = pd.read_csv(here / curve["file"])
    label = "S={%s} N*=%d K=%d" % (",".join(map(str, curve["set"])), curve["nstar"], curve["samples_per_symbol"])
    ax.loglog(df["power"], df["pe_tim_sim"], marker="o", label="TIM sim " + label)
    ax.loglog(df["power"], df["pe_tim_bound"], linestyle="--", label="TIM bound " + label)
    if "pe_papr_sim" in df:
        ax.loglog(df["power"], df["pe_papr_sim"], marker="x", linestyle=":", label="PAPR sim " + label)
ax.set_xlabel("transmit power P [W]")
ax.set_ylabel("symbol error probability")
ax.legend(fontsize="small")
fig.savefig(here / (manifest["experiment"] + ".png"), dpi=150)
)";

}  // namespace

std::string CurveSpec::name() const {
    std::string s = "S";
    for (std::size_t i = 0; i < set.size(); ++i) s += (i ? "-" : "") + std::to_string(set[i]);
    return s + "_N" + std::to_string(nstar) + "_K" + std::to_string(samples_per_symbol);
}

std::vector<CurveSpec> fig3_curves() {
    return {{{4, 8}, 32, 31}, {{4, 8, 16, 32}, 32, 31}, {{4, 8}, 128, 127}, {{4, 8, 16, 32}, 128, 127}};
}

std::vector<CurveSpec> fig4_curves() {
    std::vector<CurveSpec> out;
    for (int k : {31, 413})
        for (const auto& set : std::vector<std::vector<int>>{{4, 8}, {16, 32}, {4, 8, 16, 32}}) out.push_back({set, 32, k});
    return out;
}

const std::vector<std::string>& fig3_columns() {
    static const std::vector<std::string> cols{"power",       "pe_tim_sim", "pe_tim_ci",       "pe_tim_bound",
                                               "pe_papr_sim", "pe_papr_ci", "pe_papr_analytic"};
    return cols;
}

const std::vector<std::string>& full_columns() {
    static const std::vector<std::string> cols = [] {
        auto c = fig3_columns();
        c.insert(c.end(), {"q_analytic", "q_sampled", "rate_bits_per_sec"});
        return c;
    }();
    return cols;
}

Experiment run_fig3(const RunConfig& cfg) { return {"fig3", fig3_columns(), run_curves(cfg, fig3_curves(), false)}; }

Experiment run_fig4(const RunConfig& cfg) { return {"fig4", full_columns(), run_curves(cfg, fig4_curves(), true)}; }

Experiment run_single_sweep(const RunConfig& cfg) {
    const CurveSpec spec{cfg.tim.set, cfg.tim.nstar, cfg.tim.samples_per_symbol};
    return {"sweep", full_columns(), run_curves(cfg, {spec}, true)};
}

CsvTable to_table(const Experiment& exp, const Curve& curve) {
    CsvTable table(exp.columns);
    const bool full = exp.columns.size() == full_columns().size();
    for (const auto& p : curve.points) {
        std::vector<double> row{p.power,       p.pe_tim_sim, p.pe_tim_ci,       p.pe_tim_bound,
                                p.pe_papr_sim, p.pe_papr_ci, p.pe_papr_analytic};
        if (full) row.insert(row.end(), {p.q_analytic, p.q_sampled, curve.rate_bits_per_sec});
        table.add_row(std::move(row));
    }
    return table;
}

std::vector<std::filesystem::path> write_experiment(const Experiment& exp, const RunConfig& cfg,
                                                    const std::filesystem::path& dir, const WriteOptions& opts) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) throw tim::ConfigError("out", "cannot create " + dir.string());

    nlohmann::ordered_json manifest;
    manifest["experiment"] = exp.name;
    manifest["generator"] = "timsim";
    manifest["config"] = format_config(cfg);
    manifest["trials_per_point"] = cfg.tim.trials;
    manifest["seed"] = cfg.tim.seed;
    manifest["power_unit"] = "W";
    manifest["columns"] = exp.columns;
    manifest["curves"] = nlohmann::ordered_json::array();

    std::vector<std::filesystem::path> files;
    for (const auto& curve : exp.curves) {
        const std::string file = exp.name + "_" + curve.spec.name() + ".csv";
        const auto table = to_table(exp, curve);
        table.write(dir / file);
        files.push_back(dir / file);
        manifest["curves"].push_back({{"file", file},
                                      {"set", curve.spec.set},
                                      {"nstar", curve.spec.nstar},
                                      {"samples_per_symbol", curve.spec.samples_per_symbol},
                                      {"rows", table.rows()}});
    }

    std::ofstream m(dir / "manifest.json", std::ios::binary | std::ios::trunc);
    if (!m) throw tim::ConfigError("out", "cannot write manifest in " + dir.string());
    m << manifest.dump(2) << '\n';
    if (opts.plot_script) {
        std::ofstream py(dir / ("plot_" + exp.name + ".py"), std::ios::binary | std::ios::trunc);
        if (!py) throw tim::ConfigError("out", "cannot write plot script in " + dir.string());
        py << kPlotScript;
    }
    return files;
}

}  // namespace timsim
