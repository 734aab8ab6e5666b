#include "tim/simkit.hpp"

#include <cmath>
#include <random>
#include <string>

#include "tim/channel.hpp"
#include "tim/detail/parallel.hpp"
#include "tim/error.hpp"
#include "tim/papr_detector.hpp"
#include "tim/rng.hpp"
#include "tim/tim_detector.hpp"
#include "tim/waveform.hpp"

namespace tim {
namespace {

constexpr std::uint64_t kTrialBlock = 2048;
constexpr std::uint64_t kDrawBlock = 1 << 16;
constexpr std::uint64_t kMinTrials = 1000;

struct ErrorCounts {
    std::uint64_t tim = 0;
    std::uint64_t papr = 0;
};

struct ChannelMoments {
    double h2 = 0.0;
    double h4 = 0.0;
};

// Sample means of h^2 and h^4 over cfg.trials draws from the harvest substream.
ChannelMoments channel_moments(const TimConfig& cfg, const ExecutionPolicy& exec) {
    const double sh = std::sqrt(cfg.channel_var);
    auto blocks = detail::run_blocks<ChannelMoments>(
        cfg.trials, kTrialBlock, exec.workers, [&](std::uint64_t begin, std::uint64_t end) {
            ChannelMoments m;
            for (std::uint64_t t = begin; t < end; ++t) {
                CounterRng rng({cfg.seed, substream::harvest, t});
                std::normal_distribution<double> gauss;
                const double h = sh * gauss(rng);
                const double h2 = h * h;
                m.h2 += h2;
                m.h4 += h2 * h2;
            }
            return m;
        });
    ChannelMoments total;
    for (const auto& b : blocks) {
        total.h2 += b.h2;
        total.h4 += b.h4;
    }
    const double n = static_cast<double>(cfg.trials);
    return {total.h2 / n, total.h4 / n};
}

// Unit-power passband moments per tone count; the moments scale as P and P^2.
std::vector<PassbandMoments> unit_moments(const TimConfig& cfg) {
    std::vector<PassbandMoments> out;
    out.reserve(cfg.set.size());
    for (int n : cfg.set) out.push_back(fine_passband_moments(n, 1.0, 64 * n));
    return out;
}

double sampled_energy(const RectennaParams& rect, const ChannelMoments& h, const PassbandMoments& unit, double power) {
    return rect.a2 * h.h2 * unit.second * power + rect.a4 * h.h4 * unit.fourth * power * power;
}

void check_sweep_inputs(const TimConfig& cfg, std::span<const double> powers) {
    cfg.validate();
    if (powers.empty()) throw ConfigError("powers", "power sweep is empty");
    if (cfg.trials < kMinTrials)
        throw ConfigError("trials", "need at least " + std::to_string(kMinTrials) + " trials");
    for (double p : powers)
        if (!(p >= 0.0) || !std::isfinite(p)) throw ConfigError("powers", "powers must be finite and >= 0");
}

}  // namespace

double ci_halfwidth(double p, std::uint64_t n) {
    if (n == 0) return 0.0;
    return 1.96 * std::sqrt(std::max(0.0, p * (1.0 - p)) / static_cast<double>(n));
}

std::vector<ErrorCurvePoint> run_sweep(const TimConfig& cfg, std::span<const double> powers,
                                       const SweepOptions& opts, const ExecutionPolicy& exec) {
    check_sweep_inputs(cfg, powers);
    if (opts.papr && cfg.set.size() < 2) throw ConfigError("set", "PAPR detection needs at least two tone counts");

    ChannelMoments h_moments;
    std::vector<PassbandMoments> moments;
    if (opts.harvest) {
        h_moments = channel_moments(cfg, exec);
        moments = unit_moments(cfg);
    }

    std::vector<ErrorCurvePoint> curve;
    curve.reserve(powers.size());
    const std::size_t m = cfg.set.size();
    for (std::size_t point = 0; point < powers.size(); ++point) {
        const TimConfig at = cfg.with_power(powers[point]);
        const WaveformSet waves(at);
        const HypothesisCache cache(waves, at);

        ErrorCurvePoint pt;
        pt.power = at.power;
        pt.trials = cfg.trials;

        if (opts.tim || opts.papr) {
            auto blocks = detail::run_blocks<ErrorCounts>(
                cfg.trials, kTrialBlock, exec.workers, [&](std::uint64_t begin, std::uint64_t end) {
                    ErrorCounts c;
                    ReceivedSymbol sym;
                    std::uniform_int_distribution<std::size_t> pick(0, m - 1);
                    for (std::uint64_t t = begin; t < end; ++t) {
                        CounterRng rng({cfg.seed, static_cast<std::uint32_t>(point), t});
                        const std::size_t sent = pick(rng);
                        draw_symbol(waves[sent], at, rng, sym);
                        if (opts.tim && detect_index(sym.samples, cache) != sent) ++c.tim;
                        if (opts.papr && detect_papr(papr(sym.samples), at.set) != at.set[sent]) ++c.papr;
                    }
                    return c;
                });
            ErrorCounts total;
            for (const auto& b : blocks) {
                total.tim += b.tim;
                total.papr += b.papr;
            }
            const double n = static_cast<double>(cfg.trials);
            if (opts.tim) {
                pt.pe_tim_sim = static_cast<double>(total.tim) / n;
                pt.pe_tim_ci = ci_halfwidth(pt.pe_tim_sim, cfg.trials);
            }
            if (opts.papr) {
                pt.pe_papr_sim = static_cast<double>(total.papr) / n;
                pt.pe_papr_ci = ci_halfwidth(pt.pe_papr_sim, cfg.trials);
            }
        }
        if (opts.tim_bound && m >= 2) {
            const auto ub = tim_union_bound(at);
            pt.pe_tim_bound = ub.value;
            pt.tim_bound_clipped = ub.clipped;
        }
        if (opts.papr_analytic) pt.pe_papr_analytic = papr_error_prob(at, opts.papr_cdf).value;
        if (opts.harvest) {
            pt.q_analytic = tradeoff(at).avg_energy;
            double q = 0.0;
            for (const auto& um : moments) q += sampled_energy(at.rectenna, h_moments, um, at.power);
            pt.q_sampled = q / static_cast<double>(m);
        }
        curve.push_back(pt);
    }
    return curve;
}

std::vector<ErrorCurvePoint> run_tim_sweep(const TimConfig& cfg, std::span<const double> powers,
                                           const ExecutionPolicy& exec) {
    SweepOptions opts;
    opts.tim = true;
    opts.tim_bound = cfg.set.size() >= 2;
    return run_sweep(cfg, powers, opts, exec);
}

std::vector<ErrorCurvePoint> run_papr_sweep(const TimConfig& cfg, std::span<const double> powers,
                                            const ExecutionPolicy& exec) {
    SweepOptions opts;
    opts.tim = false;
    opts.tim_bound = false;
    opts.papr = true;
    opts.papr_analytic = true;
    return run_sweep(cfg, powers, opts, exec);
}

HarvestEstimate estimate_harvest(const TimConfig& cfg, const ExecutionPolicy& exec) {
    cfg.validate();
    if (cfg.trials < kMinTrials)
        throw ConfigError("trials", "need at least " + std::to_string(kMinTrials) + " channel draws");
    const auto h = channel_moments(cfg, exec);
    const auto moments = unit_moments(cfg);
    HarvestEstimate out;
    out.tones = cfg.set;
    double total = 0.0;
    for (std::size_t i = 0; i < cfg.set.size(); ++i) {
        const double q = sampled_energy(cfg.rectenna, h, moments[i], cfg.power);
        out.per_tone.push_back(q);
        total += q;
    }
    out.average = total / static_cast<double>(cfg.set.size());
    return out;
}

McEstimate pairwise_mc_oracle(const EigenSystem& es, std::uint64_t draws, std::uint64_t seed,
                              const ExecutionPolicy& exec) {
    if (draws == 0) throw DomainError("pairwise_mc_oracle: need at least one draw");
    auto blocks = detail::run_blocks<std::uint64_t>(
        draws, kDrawBlock, exec.workers, [&](std::uint64_t begin, std::uint64_t end) {
            CounterRng rng({seed, substream::pairwise_oracle, begin / kDrawBlock});
            std::normal_distribution<double> gauss;
            std::uint64_t hits = 0;
            for (std::uint64_t t = begin; t < end; ++t) {
                const double z1 = gauss(rng);
                const double z2 = gauss(rng);
                if (es.mu1 * z1 * z1 + es.mu2 * z2 * z2 > es.phi) ++hits;
            }
            return hits;
        });
    std::uint64_t hits = 0;
    for (auto b : blocks) hits += b;
    McEstimate est;
    est.draws = draws;
    est.value = static_cast<double>(hits) / static_cast<double>(draws);
    est.std_error = std::sqrt(est.value * (1.0 - est.value) / static_cast<double>(draws));
    est.ci_halfwidth = 1.96 * est.std_error;
    return est;
}

std::vector<double> power_sweep(double start, double stop, int points, SweepScale scale) {
    if (points < 1) throw ConfigError("sweep_points", "need at least one power");
    if (!(start >= 0.0) || !(stop >= start)) throw ConfigError("sweep_start", "need 0 <= start <= stop");
    if (scale == SweepScale::log && !(start > 0.0)) throw ConfigError("sweep_start", "log sweep needs start > 0");
    std::vector<double> out(static_cast<std::size_t>(points));
    if (points == 1) {
        out[0] = start;
        return out;
    }
    for (int i = 0; i < points; ++i) {
        const double f = static_cast<double>(i) / (points - 1);
        out[static_cast<std::size_t>(i)] = scale == SweepScale::linear
                                               ? start + f * (stop - start)
                                               : std::exp(std::log(start) + f * (std::log(stop) - std::log(start)));
    }
    out.front() = start;
    out.back() = stop;
    return out;
}

}  // namespace tim
