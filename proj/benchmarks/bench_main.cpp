#include <benchmark/benchmark.h>

#include "tim/analytics.hpp"
#include "tim/channel.hpp"
#include "tim/simkit.hpp"
#include "tim/tim_detector.hpp"

using namespace tim;

namespace {

TimConfig with_k(int k) {
    TimConfig c;
    c.set = {4, 8, 16, 32};
    c.samples_per_symbol = k;
    return c;
}

// Detection cost should grow linearly in K for a fixed set.
void BM_Detect(benchmark::State& state) {
    const auto cfg = with_k(static_cast<int>(state.range(0)));
    const WaveformSet waves(cfg);
    const HypothesisCache cache(waves, cfg);
    const auto r = draw_symbol(waves[1], cfg, StreamKey{1, 0, 0});
    for (auto _ : state) benchmark::DoNotOptimize(detect_index(r.samples, cache));
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Detect)->RangeMultiplier(2)->Range(31, 31 * 64)->Complexity(benchmark::oN);

void BM_DrawAndDetect(benchmark::State& state) {
    const auto cfg = with_k(static_cast<int>(state.range(0)));
    const WaveformSet waves(cfg);
    const HypothesisCache cache(waves, cfg);
    CounterRng rng({1, 0, 0});
    ReceivedSymbol sym;
    for (auto _ : state) {
        draw_symbol(waves[2], cfg, rng, sym);
        benchmark::DoNotOptimize(detect_index(sym.samples, cache));
    }
}
BENCHMARK(BM_DrawAndDetect)->Arg(31)->Arg(127)->Arg(413);

void BM_PairwiseIntegral(benchmark::State& state) {
    const auto cfg = with_k(31);
    const WaveformSet waves(cfg);
    const auto es = eigensystem(waves[0], waves[3], cfg);
    for (auto _ : state) benchmark::DoNotOptimize(pairwise_error_integral(es));
}
BENCHMARK(BM_PairwiseIntegral);

void BM_PairwiseSeries(benchmark::State& state) {
    const auto cfg = with_k(31);
    const WaveformSet waves(cfg);
    const auto es = eigensystem(waves[3], waves[0], cfg);
    for (auto _ : state) benchmark::DoNotOptimize(pairwise_error_series(es).value);
}
BENCHMARK(BM_PairwiseSeries);

void BM_UnionBound(benchmark::State& state) {
    const auto cfg = with_k(static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(tim_union_bound(cfg).value);
}
BENCHMARK(BM_UnionBound)->Arg(31)->Arg(413);

void BM_PaprCdf(benchmark::State& state) {
    TimConfig cfg;
    const auto x = sample_waveform(8, cfg);
    PaprCdfOptions opts;
    opts.averaging = state.range(0) == 0 ? ChannelAveraging::joint : ChannelAveraging::per_sample;
    for (auto _ : state) benchmark::DoNotOptimize(papr_cdf(6.0, x, cfg, opts));
}
BENCHMARK(BM_PaprCdf)->Arg(0)->Arg(1);

void BM_Sweep(benchmark::State& state) {
    TimConfig cfg;
    cfg.trials = 20000;
    const std::vector<double> powers{1.0};
    SweepOptions opts;
    opts.tim_bound = false;
    opts.papr = true;
    for (auto _ : state) benchmark::DoNotOptimize(run_sweep(cfg, powers, opts, {static_cast<unsigned>(state.range(0))}));
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(cfg.trials));
}
BENCHMARK(BM_Sweep)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace
BENCHMARK_MAIN();
