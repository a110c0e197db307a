#pragma once

#include <cstdint>

namespace qsearch {

// All randomness in the project flows through this generator so that runs are
// reproducible bit-for-bit across platforms: xoshiro256** with its state
// expanded from the user seed via SplitMix64. <random> distributions are
// deliberately avoided because the standard does not pin their algorithms.
class Xoshiro256 {
  public:
    explicit Xoshiro256(std::uint64_t seed) {
        std::uint64_t x = seed;
        for (auto &word : state_) {
            // SplitMix64 step.
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            word = z ^ (z >> 31);
        }
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

    /// Uniform double in [0, 1) built from the top 53 bits.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform integer in [0, bound) by rejection, bound >= 1.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (UINT64_MAX / bound);
        std::uint64_t draw = next_u64();
        while (draw >= limit) {
            draw = next_u64();
        }
        return draw % bound;
    }

  private:
    static std::uint64_t rotl(std::uint64_t v, int k) { return (v << k) | (v >> (64 - k)); }

    std::uint64_t state_[4]{};
};

} // namespace qsearch
