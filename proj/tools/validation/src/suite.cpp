#include "tim_validation/suite.hpp"

#include <cstdarg>

#include "checks.hpp"

namespace tim::validation {
namespace detail {

std::string fmt(const char* format, ...) {
    char buf[1024];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof buf, format, args);
    va_end(args);
    return buf;
}

const timsim::Experiment& Shared::fig3_run() {
    if (!fig3) {
        timsim::RunConfig cfg;
        cfg.tim.seed = opts.seed;
        cfg.workers = opts.workers;
        fig3 = timsim::run_fig3(cfg);
    }
    return *fig3;
}

const timsim::Experiment& Shared::fig4_run() {
    if (!fig4) {
        timsim::RunConfig cfg;
        cfg.tim.seed = opts.seed;
        cfg.workers = opts.workers;
        cfg.sweep_points = 9;
        fig4 = timsim::run_fig4(cfg);
    }
    return *fig4;
}

}  // namespace detail

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> list{
        {1, "union bound exact for two tone counts"},
        {2, "TIM detection beats PAPR detection"},
        {3, "set {16,32} best, {4,8,16,32} worst; {16,32} harvests most"},
        {4, "more samples lower the error, harvested energy unchanged"},
        {5, "pairwise error: integral vs chi-square Monte Carlo vs series"},
        {6, "rank-two structure of the pairwise test matrix"},
        {7, "PAPR CDF approximation vs empirical CDF"},
        {8, "passband fourth moment and harvested energy"},
        {9, "special functions vs independent oracles"},
        {10, "fig3 output independent of worker count"},
    };
    return list;
}

std::vector<Check> run_suite(const SuiteOptions& opts) {
    std::vector<Check> out;
    detail::Shared shared{opts, {}, {}};
    auto want = [&](int id) { return opts.only.empty() || opts.only.count(id) > 0; };
    auto run = [&](int id, auto&& body) {
        if (!want(id)) return;
        detail::Reporter r(id, opts, out);
        try {
            body(r);
        } catch (const std::exception& e) {
            r.check("exception", false, e.what());
        }
    };
    run(1, [&](auto& r) { detail::union_bound_exactness(r); });
    run(2, [&](auto& r) { detail::tim_beats_papr(r, shared); });
    run(3, [&](auto& r) { detail::set_ordering(r, shared); });
    run(4, [&](auto& r) { detail::samples_effect(r, shared); });
    run(5, [&](auto& r) { detail::pairwise_oracle_chain(r); });
    run(6, [&](auto& r) { detail::lemma_structure(r); });
    run(7, [&](auto& r) { detail::papr_cdf_fit(r); });
    run(8, [&](auto& r) { detail::harvest_moments(r); });
    run(9, [&](auto& r) { detail::special_functions(r); });
    run(10, [&](auto& r) { detail::determinism(r); });
    return out;
}

bool passed(const std::vector<Check>& checks, int criterion) {
    for (const auto& c : checks)
        if (!c.informational && !c.passed && (criterion == 0 || c.criterion == criterion)) return false;
    return true;
}

}  // namespace tim::validation
