#include <gtest/gtest.h>

#include <set>

#include "tim/channel.hpp"
#include "tim/error.hpp"
#include "tim/rng.hpp"

using namespace tim;
using Block = CounterRng::Block;

// Known-answer vectors of the Random123 distribution (kat_vectors, philox4x32 10 rounds).
TEST(Philox, KnownAnswerZero) {
    EXPECT_EQ(CounterRng::philox({0, 0, 0, 0}, {0, 0}), (Block{0x6627e8d5, 0xe169c58d, 0xbc57ac4c, 0x9b00dbd8}));
}

TEST(Philox, KnownAnswerOnes) {
    const std::uint32_t f = 0xffffffff;
    EXPECT_EQ(CounterRng::philox({f, f, f, f}, {f, f}), (Block{0x408f276d, 0x41c83b0e, 0xa20bc7c6, 0x6d5451fd}));
}

TEST(Philox, KnownAnswerPi) {
    EXPECT_EQ(CounterRng::philox({0x243f6a88, 0x85a308d3, 0x13198a2e, 0x03707344}, {0xa4093822, 0x299f31d0}),
              (Block{0xd16cfe09, 0x94fdcceb, 0x5001e420, 0x24126ea1}));
}

TEST(CounterRng, EqualKeysGiveEqualStreams) {
    CounterRng a({7, 3, 11}), b({7, 3, 11});
    for (int i = 0; i < 100; ++i) EXPECT_EQ(a(), b());
}

TEST(CounterRng, NeighbouringKeysDiffer) {
    std::set<std::uint32_t> first;
    for (std::uint64_t t = 0; t < 64; ++t) first.insert(CounterRng({1, 0, t})());
    for (std::uint32_t s = 1; s < 64; ++s) first.insert(CounterRng({1, s, 0})());
    first.insert(CounterRng({2, 0, 0})());
    EXPECT_EQ(first.size(), 128u);
}

TEST(CounterRng, HighTrialBitsReachTheCounter) {
    EXPECT_NE(CounterRng({1, 0, 1})(), CounterRng({1, 0, 1ull << 32 | 1})());
}

TEST(Channel, DrawIsReproducibleAndShaped) {
    const TimConfig cfg;
    const auto x = sample_waveform(4, cfg);
    const auto a = draw_symbol(x, cfg, StreamKey{5, 1, 9});
    const auto b = draw_symbol(x, cfg, StreamKey{5, 1, 9});
    EXPECT_EQ(a.samples, b.samples);
    EXPECT_EQ(a.channel, b.channel);
    EXPECT_EQ(a.samples.size(), 31u);
    EXPECT_EQ(a.true_tones, 4);
}

TEST(Channel, MakeSymbolIsAffine) {
    const TimConfig cfg;
    const auto x = sample_waveform(8, cfg);
    std::vector<double> noise(x.size(), 0.25);
    const auto r = make_symbol(x, -2.0, noise);
    for (std::size_t k = 0; k < x.size(); ++k) EXPECT_DOUBLE_EQ(r.samples[k], -2.0 * x.samples[k] + 0.25);
    noise.pop_back();
    EXPECT_THROW(make_symbol(x, 1.0, noise), DimensionError);
}

TEST(Channel, SampleMomentsOfTheNoise) {
    TimConfig cfg;
    cfg.noise_var = 2.0;
    const auto x = sample_waveform(4, cfg.with_power(0.0));
    double s2 = 0.0;
    std::size_t n = 0;
    for (std::uint64_t t = 0; t < 4000; ++t) {
        const auto r = draw_symbol(x, cfg, StreamKey{3, 0, t});
        for (double v : r.samples) s2 += v * v;
        n += r.samples.size();
    }
    EXPECT_NEAR(s2 / static_cast<double>(n), 2.0, 0.05);
}
