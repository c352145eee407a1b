#pragma once

#include <array>
#include <cstdint>

namespace maxint {

/// splitmix64 output function, also used as a general-purpose 64-bit mixer.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// splitmix64 increment ("golden gamma").
inline constexpr std::uint64_t kSplitmixGamma = 0x9e3779b97f4a7c15ull;

/// k-th output (0-based) of the splitmix64 sequence seeded with `seed`.
///
/// This is the stream-derivation rule used everywhere in the library:
/// document i of a collection draws from stream_seed(collection_seed, i),
/// trial t of an experiment from stream_seed(trial_base, t), and so on.
/// The rule is pure 64-bit integer mixing, so identical (seed, index)
/// pairs produce identical streams on every platform and thread count.
constexpr std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t k) {
    return mix64(seed + (k + 1) * kSplitmixGamma);
}

/// Deterministic pseudo-random state (xoshiro256** seeded via splitmix64).
class RngState {
public:
    explicit RngState(std::uint64_t seed) {
        std::uint64_t s = seed;
        for (auto& word : state_) {
            s += kSplitmixGamma;
            word = mix64(s);
        }
    }

    /// Independent stream for the given index, see stream_seed().
    static RngState derive(std::uint64_t seed, std::uint64_t index) {
        return RngState(stream_seed(seed, index));
    }

    std::uint64_t next_u64() {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    /// Uniform double in [0, 1) with 53-bit resolution.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in (0, 1); zero is resampled.
    double next_unit_open() {
        double u;
        do {
            u = next_unit();
        } while (u == 0.0);
        return u;
    }

    /// Uniform integer in [0, bound), bound >= 1. Unbiased via rejection.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;  // 2^64 mod bound
        for (;;) {
            const std::uint64_t x = next_u64();
            if (x >= threshold) return x % bound;
        }
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_;
};

}  // namespace maxint
