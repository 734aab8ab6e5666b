#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "checks.hpp"
#include "tim/analytics.hpp"
#include "tim/simkit.hpp"

namespace tim::validation::detail {
namespace {

double combined(double a, double b) { return std::sqrt(a * a + b * b); }

const timsim::Curve& find_curve(const timsim::Experiment& exp, const std::vector<int>& set, int k) {
    for (const auto& c : exp.curves)
        if (c.spec.set == set && c.spec.samples_per_symbol == k) return c;
    throw std::logic_error("curve " + timsim::CurveSpec{set, 32, k}.name() + " missing from " + exp.name);
}

std::string file_bytes(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

}  // namespace

void union_bound_exactness(Reporter& r) {
    TimConfig cfg;
    cfg.seed = r.options().seed;
    cfg.trials = 200000;
    const auto powers = power_sweep(1e-2, 1e2, 17, SweepScale::log);
    const auto curve = run_tim_sweep(cfg, powers, {r.options().workers});
    int used = 0;
    int bad = 0;
    double worst = 0.0;
    std::string failures;
    for (const auto& p : curve) {
        if (p.pe_tim_sim < 1e-3 || p.pe_tim_sim > 0.5) continue;
        ++used;
        const double dev = std::abs(p.pe_tim_bound - p.pe_tim_sim);
        const double tol = r.tol(std::max(0.10 * p.pe_tim_bound, 3.0 * p.pe_tim_ci));
        worst = std::max(worst, tol > 0 ? dev / tol : (dev > 0 ? INFINITY : 0.0));
        if (dev > tol) {
            ++bad;
            failures += fmt(" P=%g(bound %.5f sim %.5f)", p.power, p.pe_tim_bound, p.pe_tim_sim);
        }
    }
    r.check("S={4,8} K=31 bound vs simulation", bad == 0 && used > 0,
            fmt("%d points in [1e-3, 0.5], 2e5 trials each, worst |dev|/tol = %.3f%s", used, worst,
                failures.c_str()));
}

void tim_beats_papr(Reporter& r, Shared& s) {
    const auto& exp = s.fig3_run();
    for (const auto& c : exp.curves) {
        double worst_margin = -INFINITY;  // (pe_tim - pe_papr) / tol, must stay <= 1
        int bad = 0;
        for (const auto& p : c.points) {
            const double tol = r.tol(3.0 * combined(p.pe_tim_ci, p.pe_papr_ci));
            const double excess = p.pe_tim_sim - p.pe_papr_sim;
            if (excess > tol) ++bad;
            if (tol > 0) worst_margin = std::max(worst_margin, excess / tol);
        }
        const auto& last = c.points.back();
        r.check(c.spec.name(), bad == 0,
                fmt("%zu points, %d violations, max (tim - papr)/tol = %.3f; at P=%g tim %.5f papr %.5f", c.points.size(),
                    bad, worst_margin, last.power, last.pe_tim_sim, last.pe_papr_sim));
    }
}

void set_ordering(Reporter& r, Shared& s) {
    const auto& exp = s.fig4_run();
    const std::vector<int> best{16, 32}, small{4, 8}, all{4, 8, 16, 32};
    for (int k : {31, 413}) {
        const auto& b = find_curve(exp, best, k);
        const auto& sm = find_curve(exp, small, k);
        const auto& a = find_curve(exp, all, k);
        int best_bad = 0, worst_bad = 0, energy_bad = 0;
        double best_gap = -INFINITY;
        for (std::size_t i = 0; i < b.points.size(); ++i) {
            const auto &pb = b.points[i], &ps = sm.points[i], &pa = a.points[i];
            for (const auto* other : {&ps, &pa}) {
                const double tol = r.tol(3.0 * combined(pb.pe_tim_ci, other->pe_tim_ci));
                const double excess = pb.pe_tim_sim - other->pe_tim_sim;
                if (excess > tol) ++best_bad;
                if (tol > 0) best_gap = std::max(best_gap, excess / tol);
            }
            for (const auto* other : {&ps, &pb}) {
                const double tol = r.tol(3.0 * combined(pa.pe_tim_ci, other->pe_tim_ci));
                if (other->pe_tim_sim - pa.pe_tim_sim > tol) ++worst_bad;
            }
            if (pb.power > 0 && !(pb.q_analytic > ps.q_analytic && pb.q_analytic > pa.q_analytic &&
                                  pb.q_sampled > ps.q_sampled && pb.q_sampled > pa.q_sampled))
                ++energy_bad;
        }
        r.check(fmt("K=%d {16,32} lowest error", k), best_bad == 0,
                fmt("%zu points, %d violations, max excess/tol = %.3f", b.points.size(), best_bad, best_gap));
        r.check(fmt("K=%d {4,8,16,32} highest error", k), worst_bad == 0, fmt("%d violations", worst_bad));
        r.check(fmt("K=%d {16,32} highest harvested energy", k), energy_bad == 0,
                fmt("q at P=%g: {4,8} %.6g, {16,32} %.6g, {4,8,16,32} %.6g", b.points.back().power,
                    sm.points.back().q_analytic, b.points.back().q_analytic, a.points.back().q_analytic));
    }
    // the union bound is exact for two tone counts, so this shows the true ordering
    std::string cmp;
    for (double p : {0.01, 0.03, 0.1, 1.0}) {
        TimConfig c;
        c.power = p;
        c.set = small;
        const double ps = tim_union_bound(c).value;
        c.set = best;
        const double pb = tim_union_bound(c).value;
        cmp += fmt(" P=%g: {4,8} %.5f {16,32} %.5f;", p, ps, pb);
    }
    r.info("K=31 exact two-set error probabilities", cmp);
}

void samples_effect(Reporter& r, Shared& s) {
    const auto& exp = s.fig4_run();
    for (const auto& set : std::vector<std::vector<int>>{{4, 8}, {16, 32}, {4, 8, 16, 32}}) {
        const auto& lo = find_curve(exp, set, 31);
        const auto& hi = find_curve(exp, set, 413);
        int err_bad = 0, q_bad = 0;
        double worst_q = 0.0;
        for (std::size_t i = 0; i < lo.points.size(); ++i) {
            const auto &a = lo.points[i], &b = hi.points[i];
            if (b.pe_tim_sim - a.pe_tim_sim > r.tol(3.0 * combined(a.pe_tim_ci, b.pe_tim_ci))) ++err_bad;
            const double exact = tradeoff(lo.config.with_power(a.power)).avg_energy;
            if (a.q_analytic != b.q_analytic || a.q_sampled != b.q_sampled || a.q_analytic != exact) ++q_bad;
            if (exact > 0) worst_q = std::max(worst_q, std::abs(a.q_sampled - exact) / exact);
        }
        const auto name = timsim::CurveSpec{set, 32, 0}.name();
        const std::string label = name.substr(0, name.find("_N"));
        r.check(label + " error K=413 <= K=31", err_bad == 0,
                fmt("%d violations; at P=%g: K=31 %.5f, K=413 %.5f", err_bad, lo.points.back().power,
                    lo.points.back().pe_tim_sim, hi.points.back().pe_tim_sim));
        r.check(label + " q columns independent of K and equal to the closed form", q_bad == 0,
                fmt("%d mismatches", q_bad));
        r.check(label + " sampled q vs closed form", worst_q <= r.tol(0.04),
                fmt("max relative deviation %.4f (1e5 channel draws, tolerance 0.04)", worst_q));
    }
}

void determinism(Reporter& r) {
    namespace fs = std::filesystem;
    fs::path root = r.options().scratch;
    if (root.empty()) root = fs::temp_directory_path() / fmt("timsim-determinism-%llu", static_cast<unsigned long long>(std::random_device{}()));
    timsim::RunConfig cfg;
    cfg.tim.seed = r.options().seed;
    cfg.tim.trials = 4000;
    cfg.sweep_points = 5;
    std::vector<std::vector<fs::path>> runs;
    for (unsigned workers : {1u, 4u, 1u}) {
        cfg.workers = workers;
        const auto dir = root / fmt("run%zu_w%u", runs.size(), workers);
        runs.push_back(timsim::write_experiment(timsim::run_fig3(cfg), cfg, dir));
        runs.back().push_back(dir / "manifest.json");
    }
    int differing = 0;
    for (std::size_t f = 0; f < runs[0].size(); ++f)
        for (std::size_t k = 1; k < runs.size(); ++k)
            if (file_bytes(runs[0][f]) != file_bytes(runs[k][f])) ++differing;
    r.check("fig3 bytes: workers 1 vs 4, and rerun", differing == 0,
            fmt("%zu files per run, %d differ", runs[0].size(), differing));
    std::error_code ec;
    if (r.options().scratch.empty()) fs::remove_all(root, ec);
}

}  // namespace tim::validation::detail
