#include <algorithm>
#include <cmath>
#include <functional>

#include "checks.hpp"
#include "tim/analytics.hpp"
#include "tim/channel.hpp"
#include "tim/papr_detector.hpp"
#include "tim/rng.hpp"
#include "tim/simkit.hpp"
#include "tim/waveform.hpp"
#include "tim_validation/oracles.hpp"

namespace tim::validation::detail {
namespace {

TimConfig full_set(int nstar, int k, double power) {
    TimConfig c;
    c.set = {4, 8, 16, 32};
    c.nstar = nstar;
    c.samples_per_symbol = k;
    c.power = power;
    return c;
}

struct KsDistance {
    double lower = 0.0;  ///< over the evaluated order statistics
    double upper = 0.0;  ///< rigorous bound over the whole line
};

// KS distance between the empirical CDF of a sorted sample and a continuous F,
// with F evaluated only at `evals` order statistics.
KsDistance ks_distance(const std::vector<double>& sorted, const std::function<double(double)>& cdf, int evals) {
    const std::size_t n = sorted.size();
    const double dn = static_cast<double>(n);
    std::vector<std::size_t> idx;
    for (int k = 0; k < evals; ++k) idx.push_back(static_cast<std::size_t>(std::llround(static_cast<double>(k) * (n - 1) / (evals - 1))));
    idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
    std::vector<double> f(idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) f[k] = cdf(sorted[idx[k]]);

    KsDistance d;
    for (std::size_t k = 0; k < idx.size(); ++k) {
        const double i = static_cast<double>(idx[k]);
        d.lower = std::max({d.lower, std::abs(f[k] - i / dn), std::abs(f[k] - (i + 1) / dn)});
    }
    d.upper = std::max({d.lower, f.front(), 1.0 - f.back()});
    for (std::size_t k = 0; k + 1 < idx.size(); ++k) {
        const double a = static_cast<double>(idx[k]), b = static_cast<double>(idx[k + 1]);
        d.upper = std::max({d.upper, f[k + 1] - (a + 1) / dn, b / dn - f[k]});
    }
    return d;
}

}  // namespace

void pairwise_oracle_chain(Reporter& r) {
    constexpr std::uint64_t draws = 10'000'000;
    int pairs = 0, mc_bad = 0, converged = 0, series_bad = 0;
    double worst_z = 0.0, worst_series = 0.0;
    std::string failures;
    for (auto [nstar, k] : std::vector<std::pair<int, int>>{{32, 31}, {128, 127}, {32, 413}}) {
        for (double p : {0.1, 1.0, 10.0}) {
            const auto cfg = full_set(nstar, k, p);
            const WaveformSet waves(cfg);
            for (std::size_t i = 0; i < waves.size(); ++i) {
                for (std::size_t j = 0; j < waves.size(); ++j) {
                    if (i == j) continue;
                    const auto es = eigensystem(waves[i], waves[j], cfg);
                    const double integral = pairwise_error_integral(es);
                    const std::uint64_t seed = r.options().seed * 0x9E3779B97F4A7C15ull + static_cast<std::uint64_t>(pairs);
                    const auto mc = pairwise_mc_oracle(es, draws, seed, {r.options().workers});
                    const double se = std::sqrt(integral * (1.0 - integral) / static_cast<double>(draws));
                    const double z = se > 0 ? std::abs(mc.value - integral) / se : 0.0;
                    worst_z = std::max(worst_z, z);
                    if (std::abs(mc.value - integral) > r.tol(3.0 * se)) {
                        ++mc_bad;
                        failures += fmt(" N*=%d K=%d P=%g %d->%d (int %.6f mc %.6f);", nstar, k, p, es.from_tones,
                                        es.to_tones, integral, mc.value);
                    }
                    const auto series = pairwise_error_series(es);
                    if (series.converged) {
                        ++converged;
                        const double dev = std::abs(series.value - integral);
                        worst_series = std::max(worst_series, dev);
                        if (dev > r.tol(1e-6)) ++series_bad;
                    }
                    ++pairs;
                }
            }
        }
    }
    r.check("integral vs Monte Carlo (1e7 draws)", mc_bad == 0,
            fmt("%d pairs, %d beyond 3 SE, max |dev|/SE = %.2f%s", pairs, mc_bad, worst_z, failures.c_str()));
    r.check("series vs integral where converged", series_bad == 0,
            fmt("%d of %d converged, max |dev| = %.2e", converged, pairs, worst_series));
}

void lemma_structure(Reporter& r) {
    auto structure = [&](double power, bool assert) {
        const auto cfg = full_set(32, 31, power);
        const WaveformSet waves(cfg);
        int rank_bad = 0, sign_bad = 0, trace_bad = 0, reduce_bad = 0;
        double worst_trace = 0.0, worst_reduce = 0.0, worst_lemma = 0.0;
        for (std::size_t i = 0; i < waves.size(); ++i) {
            for (std::size_t j = 0; j < waves.size(); ++j) {
                if (i == j) continue;
                const auto dense = oracle::dense_pairwise(waves[i], waves[j], cfg);
                const auto es = eigensystem(waves[i], waves[j], cfg);
                if (dense.significant != 2) ++rank_bad;
                if (!(dense.lambda_pos > 0 && dense.lambda_neg < 0 && es.mu1 > 0 && es.mu2 < 0)) ++sign_bad;
                const double lead = std::max(std::abs(dense.lambda_pos), std::abs(dense.lambda_neg));
                const double trace = std::abs(dense.lambda_pos + dense.lambda_neg) / lead;
                worst_trace = std::max(worst_trace, trace);
                if (trace > r.tol(1e-3)) ++trace_bad;
                const double dl = std::max(std::abs(es.lambda1 - dense.lambda_pos), std::abs(es.lambda2 - dense.lambda_neg)) / dense.w_norm;
                const double dm = std::max(std::abs(es.mu1 - dense.mu_pos), std::abs(es.mu2 - dense.mu_neg)) / dense.mu_norm;
                worst_reduce = std::max({worst_reduce, dl, dm});
                if (std::max(dl, dm) > r.tol(1e-10)) ++reduce_bad;
                worst_lemma = std::max({worst_lemma, std::abs(es.lemma_mu1 - es.mu1) / std::abs(es.mu1),
                                        std::abs(es.lemma_mu2 - es.mu2) / std::abs(es.mu2)});
            }
        }
        if (assert) {
            r.check("exactly two significant eigenvalues", rank_bad == 0, fmt("12 ordered pairs, %d violations", rank_bad));
            r.check("opposite signs", sign_bad == 0, fmt("%d violations", sign_bad));
            r.check("|lambda1 + lambda2| <= 1e-3 |lambda1|", trace_bad == 0,
                    fmt("P=%g: max ratio %.4g, %d of 12 pairs above 1e-3", power, worst_trace, trace_bad));
            r.check("2x2 reduction vs dense", reduce_bad == 0,
                    fmt("max relative deviation (lambda and mu) %.2e", worst_reduce));
        }
        r.info(fmt("P=%g trace ratio and product-form mu", power),
               fmt("max |lambda1+lambda2|/|lambda1| = %.4g; max relative gap between exact mu and sn2*lambda1, "
                   "(sn2+sh2|x_i|^2)*lambda2 = %.4f",
                   worst_trace, worst_lemma));
    };
    structure(1.0, true);
    for (double p : {0.1, 10.0, 100.0}) structure(p, false);
}

void papr_cdf_fit(Reporter& r) {
    constexpr std::uint64_t symbols = 100000;
    constexpr int evals = 2000;
    for (double noise : {1.0, 2.0}) {
        for (int n : {4, 8}) {
            TimConfig cfg;
            cfg.noise_var = noise;
            const auto x = sample_waveform(n, cfg);
            std::vector<double> raw(symbols), normalized(symbols);
            for (std::uint64_t t = 0; t < symbols; ++t) {
                const std::uint64_t trial = (static_cast<std::uint64_t>(n) << 40) | (static_cast<std::uint64_t>(noise) << 32) | t;
                const auto sym = draw_symbol(x, cfg, StreamKey{r.options().seed, substream::papr_cdf_check, trial});
                double peak = 0.0;
                for (double v : sym.samples) peak = std::max(peak, v * v);
                raw[t] = papr(sym);
                normalized[t] = peak / (sym.channel * sym.channel * x.xi + cfg.noise_var);
            }
            std::sort(raw.begin(), raw.end());
            std::sort(normalized.begin(), normalized.end());

            struct Variant {
                const char* name;
                ChannelAveraging avg;
                PaprNormalization norm;
            };
            const Variant variants[] = {{"joint, theta", ChannelAveraging::joint, PaprNormalization::expected_power},
                                        {"joint, theta/sn2", ChannelAveraging::joint, PaprNormalization::noise_scaled},
                                        {"per-sample, theta", ChannelAveraging::per_sample, PaprNormalization::expected_power},
                                        {"per-sample, theta/sn2", ChannelAveraging::per_sample, PaprNormalization::noise_scaled}};
            std::string report;
            for (const auto& v : variants) {
                PaprCdfOptions o;
                o.averaging = v.avg;
                o.normalization = v.norm;
                auto f = [&](double theta) { return papr_cdf(theta, x, cfg, o); };
                const auto dn = ks_distance(normalized, f, evals);
                const auto dr = ks_distance(raw, f, evals);
                report += fmt(" [%s] normalized %.4f, raw %.4f;", v.name, dn.upper, dr.upper);
                if (noise == 1.0 && v.avg == ChannelAveraging::joint && v.norm == PaprNormalization::expected_power) {
                    r.check(fmt("N=%d KS of the normalized statistic", n), dn.upper <= r.tol(0.03),
                            fmt("1e5 symbols, K=31, P=1: KS <= %.4f (evaluated %.4f), tolerance 0.03", dn.upper, dn.lower));
                }
            }
            r.info(fmt("N=%d sn2=%g KS by convention", n, noise), report);
        }
    }
}

void harvest_moments(Reporter& r) {
    int bad = 0;
    std::string rows;
    for (int n : {4, 8, 16, 32}) {
        const auto m = fine_passband_moments(n, 1.0, 64 * n);
        const double expected = (2.0 * n * n + 1.0) / (2.0 * n);
        const auto brute = oracle::brute_passband_moments(n, 1.0, 100003);
        const double rel = std::abs(m.fourth - expected) / expected;
        const double brute_dev = std::abs(brute.fourth - m.fourth) / expected;
        if (rel > r.tol(0.01) || std::abs(m.second - 1.0) > r.tol(0.01) || brute_dev > r.tol(1e-9)) ++bad;
        rows += fmt(" N=%d: <x^4> %.12g vs %.12g (brute force %.12g);", n, m.fourth, expected, brute.fourth);
    }
    r.check("passband fourth moment (2N^2+1)/(2N) P^2", bad == 0, rows);

    TimConfig cfg;
    cfg.set = {4, 8, 16, 32};
    cfg.trials = 1'000'000;
    cfg.seed = r.options().seed;
    const auto est = estimate_harvest(cfg, {r.options().workers});
    double worst = 0.0;
    for (std::size_t i = 0; i < est.tones.size(); ++i) {
        const double exact = harvested_energy(est.tones[i], cfg);
        worst = std::max(worst, std::abs(est.per_tone[i] - exact) / exact);
    }
    r.check("estimate_harvest vs closed form (1e6 draws)", worst <= r.tol(0.02),
            fmt("max relative deviation %.4f over N in {4,8,16,32}", worst));

    auto other = cfg;
    other.samples_per_symbol = 413;
    other.noise_var = 2.0;
    const auto est2 = estimate_harvest(other, {r.options().workers});
    r.check("estimate_harvest independent of K and noise", est2.per_tone == est.per_tone,
            est2.per_tone == est.per_tone ? "bit-identical at K=413, sn2=2" : "differs");
}

}  // namespace tim::validation::detail
