#pragma once

#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "tim_validation/suite.hpp"
#include "timsim/experiments.hpp"

namespace tim::validation::detail {

/// Collects the checks of one criterion.
class Reporter {
public:
    Reporter(int criterion, const SuiteOptions& opts, std::vector<Check>& sink)
        : criterion_(criterion), opts_(opts), sink_(sink) {}

    double tol(double base) const { return base * opts_.tolerance_scale; }
    const SuiteOptions& options() const { return opts_; }

    void check(std::string name, bool ok, std::string detail) { emit({criterion_, std::move(name), ok, false, std::move(detail)}); }
    void info(std::string name, std::string detail) { emit({criterion_, std::move(name), true, true, std::move(detail)}); }

private:
    void emit(Check c) {
        if (opts_.on_check) opts_.on_check(c);
        sink_.push_back(std::move(c));
    }
    int criterion_;
    const SuiteOptions& opts_;
    std::vector<Check>& sink_;
};

/// Figure runs shared by several criteria, computed on first use.
struct Shared {
    const SuiteOptions& opts;
    std::optional<timsim::Experiment> fig3;
    std::optional<timsim::Experiment> fig4;

    const timsim::Experiment& fig3_run();
    const timsim::Experiment& fig4_run();
};

std::string fmt(const char* format, ...) __attribute__((format(printf, 1, 2)));

void union_bound_exactness(Reporter& r);
void tim_beats_papr(Reporter& r, Shared& s);
void set_ordering(Reporter& r, Shared& s);
void samples_effect(Reporter& r, Shared& s);
void pairwise_oracle_chain(Reporter& r);
void lemma_structure(Reporter& r);
void papr_cdf_fit(Reporter& r);
void harvest_moments(Reporter& r);
void special_functions(Reporter& r);
void determinism(Reporter& r);

}  // namespace tim::validation::detail
