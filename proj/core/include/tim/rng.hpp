#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace tim {

/// Coordinates of one independent random stream.
///
/// Every Monte Carlo trial owns the stream (seed, substream, trial), so the
/// draws of a trial do not depend on which worker runs it or in what order.
struct StreamKey {
    std::uint64_t seed = 0;
    std::uint32_t substream = 0;  ///< sweep point index, or a reserved tag
    std::uint64_t trial = 0;
};

/// Reserved substreams, kept clear of sweep point indices.
namespace substream {
inline constexpr std::uint32_t harvest = 0xFFFF0001u;
inline constexpr std::uint32_t pairwise_oracle = 0xFFFF0002u;
inline constexpr std::uint32_t papr_cdf_check = 0xFFFF0003u;
}  // namespace substream

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// The 64-bit seed is the key; (substream, trial) fill three counter words and
/// the fourth word counts output blocks. Satisfies UniformRandomBitGenerator.
class CounterRng {
public:
    using result_type = std::uint32_t;
    using Block = std::array<std::uint32_t, 4>;
    using Key = std::array<std::uint32_t, 2>;

    explicit CounterRng(const StreamKey& key);

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()();

    /// One application of the ten-round Philox bijection.
    static Block philox(Block counter, Key key);

private:
    Key key_;
    Block counter_;
    Block buffer_{};
    unsigned used_ = 4;
};

}  // namespace tim
