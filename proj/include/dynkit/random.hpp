#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace dynkit {

namespace detail {

/// SplitMix64 output mix. Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

} // namespace detail

/// Counter-based random stream (SplitMix64).
///
/// The whole state is one 64-bit word that advances by a fixed odd constant;
/// each output is a stateless mix of the counter. Identical seeds therefore
/// produce identical sequences on every platform, the state serializes to a
/// single integer, and `split` derives statistically independent child
/// streams for parallel replicates.
class RandomStream {
public:
    RandomStream() = default;
    explicit constexpr RandomStream(std::uint64_t seed) : state_(seed) {}

    /// Next raw 64-bit word; advances the stream.
    std::uint64_t next_u64() {
        state_ += detail::kGolden;
        return detail::mix64(state_);
    }

    /// Uniform draw in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; consumes exactly two uniforms.
    /// The first uniform is reflected into (0, 1] so log never sees zero.
    double normal() {
        const double u1 = 1.0 - uniform();
        const double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }

    /// Uniform draw in [lo, hi).
    double uniform_in(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Derive an independent child stream keyed by `key`. Pure: the parent
    /// is not advanced, and the same (state, key) always yields the same child.
    constexpr RandomStream split(std::uint64_t key) const {
        return RandomStream(detail::mix64(state_ ^ (detail::mix64(key) + detail::kGolden)));
    }

    /// Serialization point: restoring from `state()` continues the exact sequence.
    constexpr std::uint64_t state() const { return state_; }
    static constexpr RandomStream from_state(std::uint64_t s) { return RandomStream(s); }

    friend constexpr bool operator==(const RandomStream& a, const RandomStream& b) {
        return a.state_ == b.state_;
    }

private:
    std::uint64_t state_{0};
};

/// Pure draw: same input stream always yields the same (value, successor) pair.
inline std::pair<double, RandomStream> stream_draw(RandomStream s) {
    const double u = s.uniform();
    return {u, s};
}

} // namespace dynkit
