#include "tim/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "tim/error.hpp"
#include "tim/papr_detector.hpp"
#include "tim/quadrature.hpp"

namespace tim {
namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
    return s;
}

// Real eigenvalues of a 2x2 matrix with negative determinant.
void split_eigenvalues(double trace, double det, double& positive, double& negative) {
    const double half = 0.5 * trace;
    const double root = std::sqrt(half * half - det);
    if (half >= 0.0) {
        positive = half + root;
        negative = det / positive;
    } else {
        negative = half - root;
        positive = det / negative;
    }
}

void check_eigensystem(const EigenSystem& es) {
    if (!std::isfinite(es.mu1) || !std::isfinite(es.mu2) || !std::isfinite(es.phi))
        throw DomainError("pairwise error: non-finite eigensystem");
    if (!(es.mu1 > 0.0 && es.mu2 < 0.0))
        throw DomainError("pairwise error: eigenvalues must have opposite signs (mu1 > 0 > mu2)");
}

// log of int_0^inf (z + c)^(j + 1/2) z^(-1/2) e^(-z/2) dz for c > 0, i.e.
// log(sqrt(pi) c^(j+1) U(1/2, j + 2, c/2)), integrated after z = w^2 with the
// integrand scaled by its peak value.
double log_shifted_moment(int j, double c) {
    const double p = j + 0.5;
    const double peak2 = std::max(0.0, 2.0 * p - c);
    const double log_peak = p * std::log(peak2 + c) - 0.5 * peak2;
    auto f = [&](double w) { return std::exp(p * std::log(w * w + c) - 0.5 * w * w - log_peak); };
    const double w_peak = std::sqrt(peak2);
    const quadrature::Control ctl{0.0, 1e-14, 4000};
    double total = quadrature::integrate(f, w_peak, w_peak + 40.0, ctl).value;
    if (w_peak > 0.0) total += quadrature::integrate(f, 0.0, w_peak, ctl).value;
    return std::log(2.0 * total) + log_peak;
}

}  // namespace

EigenSystem eigensystem(const MultisineWaveform& from, const MultisineWaveform& to, const TimConfig& cfg) {
    if (from.size() != to.size()) throw DimensionError("eigensystem: waveform lengths differ");
    const double s = cfg.channel_var;
    const double n = cfg.noise_var;
    const double aa = dot(from.samples, from.samples);
    const double bb = dot(to.samples, to.samples);
    const double ab = dot(from.samples, to.samples);
    const double gram = aa * bb - ab * ab;
    if (!(aa > 0.0) || !(bb > 0.0) || gram <= 1e-12 * aa * bb)
        throw RankDeficiencyError("eigensystem: waveforms " + std::to_string(from.tones) + " and " +
                                  std::to_string(to.tones) + " are linearly dependent");

    const double ci = (s / (n * n)) / (1.0 + s * aa / n);
    const double cj = (s / (n * n)) / (1.0 + s * bb / n);

    // W on the basis {x_i, x_j}: M = [[-ci aa, -ci ab], [cj ab, cj bb]].
    const double w_trace = cj * bb - ci * aa;
    const double w_det = -ci * cj * gram;
    EigenSystem es;
    es.from_tones = from.tones;
    es.to_tones = to.tones;
    split_eigenvalues(w_trace, w_det, es.lambda1, es.lambda2);

    // R_i on the same basis: G = [[n + s aa, s ab], [0, n]]; W R_i -> M G.
    const double m11 = -ci * aa, m21 = cj * ab, m22 = cj * bb;
    const double g11 = n + s * aa, g12 = s * ab, g22 = n;
    const double mg_trace = m11 * g11 + (m21 * g12 + m22 * g22);
    const double mg_det = w_det * g11 * g22;
    split_eigenvalues(mg_trace, mg_det, es.mu1, es.mu2);

    es.lemma_mu1 = n * es.lambda1;
    es.lemma_mu2 = (n + s * aa) * es.lambda2;
    es.phi = std::log1p(s * bb / n) - std::log1p(s * aa / n);
    return es;
}

double pairwise_error_integral(const EigenSystem& es) {
    check_eigensystem(es);
    const double mu_pos = es.mu1;
    const double mu_neg_abs = -es.mu2;
    const double z0 = std::max(0.0, es.phi / mu_pos);
    const double w0 = std::sqrt(z0);
    auto integrand = [&](double w) {
        const double y = (mu_pos * w * w - es.phi) / (2.0 * mu_neg_abs);
        if (!(y > 0.0)) return 0.0;
        return specfun::lower_incomplete_gamma(0.5, y) * std::exp(-0.5 * w * w);
    };
    // e^{-w^2/2} has dropped below e^{-72} relative to its value at w0 by w0 + 12.
    const auto r = quadrature::integrate(integrand, w0, w0 + 12.0, {1e-16, 1e-12, 4000});
    const double p = std::numbers::sqrt2 / std::numbers::pi * r.value;
    return std::clamp(p, 0.0, 1.0);
}

SeriesResult pairwise_error_series(const EigenSystem& es, const specfun::SeriesControl& ctl) {
    check_eigensystem(es);
    ctl.validate();
    const double rho = es.mu1 / (-es.mu2);
    const double z0 = std::max(0.0, es.phi / es.mu1);
    const double x = 0.5 * z0;
    const double log_rho = std::log(rho);
    const double log_pref = std::log(2.0 / std::numbers::pi);
    // For phi < 0 the lower limit is 0 rather than phi/mu1 and the shifted
    // moments are U(1/2, j + 2, .) instead of U(1/2, -j, .).
    const bool shifted = es.phi < 0.0;
    const double c = -es.phi / es.mu1;

    SeriesResult out;
    out.partial_sums.reserve(static_cast<std::size_t>(ctl.max_terms));
    double sum = 0.0;
    double prev_mag = std::numeric_limits<double>::infinity();
    int growing = 0;
    for (int j = 0; j < ctl.max_terms; ++j) {
        double log_mag = -std::numeric_limits<double>::infinity();
        if (shifted) {
            log_mag = -std::log(std::numbers::pi * std::numbers::sqrt2) - std::lgamma(j + 1.0) - std::log(j + 0.5) +
                      (j + 0.5) * (log_rho - std::numbers::ln2) + log_shifted_moment(j, c);
        } else if (const double u = specfun::tricomi_u_half(j, x); u > 0.0) {
            log_mag = log_pref - std::lgamma(j + 1.0) - std::log(2.0 * j + 1.0) + (j + 0.5) * log_rho +
                      std::lgamma(j + 1.5) - x + std::log(u);
        }
        const double term = (j % 2 == 0 ? 1.0 : -1.0) * std::exp(log_mag);
        sum += term;
        out.partial_sums.push_back(sum);
        out.terms = j + 1;
        const double mag = std::abs(term);
        if (!std::isfinite(sum)) break;
        if (mag <= ctl.rel_tol * std::abs(sum)) {
            out.converged = true;
            break;
        }
        growing = mag > prev_mag ? growing + 1 : 0;
        if (growing >= 10) break;
        prev_mag = mag;
    }
    out.value = sum;
    return out;
}

UnionBound tim_union_bound(const TimConfig& cfg) {
    cfg.validate();
    if (cfg.set.size() < 2) throw ConfigError("set", "union bound needs at least two tone counts");
    const auto m = cfg.set.size();
    double total = 0.0;
    if (cfg.power == 0.0) {
        // identical hypotheses: the tie rule sends every symbol to min(S)
        for (std::size_t i = 0; i < m; ++i) total += static_cast<double>(i);
    } else {
        const WaveformSet waves(cfg);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j)
                if (i != j) total += pairwise_error_integral(eigensystem(waves[i], waves[j], cfg));
    }
    UnionBound ub;
    ub.raw = total / static_cast<double>(m);
    ub.value = std::clamp(ub.raw, 0.0, 1.0);
    ub.clipped = ub.value != ub.raw;
    return ub;
}

namespace {

// P{(Z + a)^2 <= b^2}, written without the 1 - Q cancellation.
double noncentral_chi1_cdf(double a, double b) {
    const double r = 1.0 / std::numbers::sqrt2;
    return std::max(0.0, 0.5 * (specfun::erfc((a - b) * r) - specfun::erfc((a + b) * r)));
}

double papr_cdf_at_order(double theta_eff, const MultisineWaveform& x, const TimConfig& cfg, ChannelAveraging avg,
                         int order) {
    const auto& rule = quadrature::gauss_hermite(order);
    const double sn = std::sqrt(cfg.noise_var);
    const double scale = std::sqrt(2.0 * cfg.channel_var);
    const double root_theta = std::sqrt(theta_eff);
    const std::size_t half = rule.nodes.size() / 2;  // order is even: nodes pair up as +-t

    if (avg == ChannelAveraging::joint) {
        double acc = 0.0;
        for (std::size_t i = half; i < rule.nodes.size(); ++i) {
            const double h = scale * rule.nodes[i];
            const double b = root_theta * std::sqrt(h * h * x.xi / cfg.noise_var + 1.0);
            double prod = 1.0;
            for (double xk : x.samples) {
                prod *= noncentral_chi1_cdf(std::abs(h * xk) / sn, b);
                if (prod == 0.0) break;
            }
            acc += 2.0 * rule.weights[i] * prod;
        }
        return acc / std::sqrt(std::numbers::pi);
    }

    double prod = 1.0;
    for (double xk : x.samples) {
        double tail = 0.0;
        for (std::size_t i = half; i < rule.nodes.size(); ++i) {
            const double h = scale * rule.nodes[i];
            const double b = root_theta * std::sqrt(h * h * x.xi / cfg.noise_var + 1.0);
            tail += 2.0 * rule.weights[i] * (1.0 - noncentral_chi1_cdf(std::abs(h * xk) / sn, b));
        }
        prod *= 1.0 - tail / std::sqrt(std::numbers::pi);
    }
    return prod;
}

}  // namespace

PaprCdfResult papr_cdf_detailed(double theta, const MultisineWaveform& x, const TimConfig& cfg,
                                const PaprCdfOptions& opts) {
    if (!(theta >= 0.0)) throw DomainError("papr_cdf: theta must be >= 0");
    if (opts.initial_order < 2 || opts.initial_order % 2 != 0 || opts.max_order < opts.initial_order)
        throw DomainError("papr_cdf: Gauss-Hermite orders must be even and ordered");
    if (std::isinf(theta)) return {1.0, 0, true};
    const double theta_eff = opts.normalization == PaprNormalization::noise_scaled ? theta / cfg.noise_var : theta;
    if (theta_eff == 0.0) return {0.0, 0, true};

    int order = opts.initial_order;
    double value = papr_cdf_at_order(theta_eff, x, cfg, opts.averaging, order);
    while (order * 2 <= opts.max_order) {
        const double next = papr_cdf_at_order(theta_eff, x, cfg, opts.averaging, order * 2);
        order *= 2;
        const bool settled = std::abs(next - value) <= opts.tolerance;
        value = next;
        if (settled) return {std::clamp(value, 0.0, 1.0), order, true};
    }
    return {std::clamp(value, 0.0, 1.0), order, false};
}

double papr_cdf(double theta, const MultisineWaveform& x, const TimConfig& cfg, const PaprCdfOptions& opts) {
    return papr_cdf_detailed(theta, x, cfg, opts).value;
}

double papr_cdf(double theta, int tones, const TimConfig& cfg, const PaprCdfOptions& opts) {
    return papr_cdf(theta, sample_waveform(tones, cfg), cfg, opts);
}

PaprErrorResult papr_error_prob(const TimConfig& cfg, const PaprCdfOptions& opts) {
    cfg.validate();
    const auto bounds = decision_boundaries(cfg.set);
    const WaveformSet waves(cfg);
    const std::size_t m = cfg.set.size();
    PaprErrorResult out;
    out.per_symbol.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        double p = 0.0;
        if (i + 1 < m) p += 1.0 - papr_cdf(bounds[i], waves[i], cfg, opts);
        if (i > 0) p += papr_cdf(bounds[i - 1], waves[i], cfg, opts);
        out.per_symbol[i] = std::clamp(p, 0.0, 1.0);
    }
    double total = 0.0;
    for (double p : out.per_symbol) total += p;
    out.value = total / static_cast<double>(m);
    return out;
}

double harvested_energy(int tones, const TimConfig& cfg) {
    if (tones < 1) throw DomainError("harvested_energy: need at least one tone");
    const double P = cfg.power;
    const double sh2 = cfg.channel_var;
    const double crest = (2.0 * tones * tones + 1.0) / (2.0 * tones);
    return cfg.rectenna.a2 * sh2 * P + 3.0 * cfg.rectenna.a4 * sh2 * sh2 * crest * P * P;
}

Tradeoff tradeoff(const TimConfig& cfg) {
    cfg.validate();
    const double m = static_cast<double>(cfg.set.size());
    Tradeoff t;
    t.rate_bits_per_sec = std::log2(m) / cfg.symbol_time();
    double q = 0.0;
    double tones = 0.0;
    for (int n : cfg.set) {
        q += harvested_energy(n, cfg);
        tones += n;
    }
    t.avg_energy = q / m;
    const double P = cfg.power;
    t.avg_energy_large_n = cfg.rectenna.a2 * cfg.channel_var * P +
                           3.0 * cfg.rectenna.a4 * cfg.channel_var * cfg.channel_var * P * P * tones / m;
    return t;
}

}  // namespace tim
