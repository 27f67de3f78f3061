// Seeded, splittable pseudo-random generator for the Monte Carlo engine.
//
// xoshiro256++ (Blackman & Vigna, public domain reference implementation)
// seeded through splitmix64. The generator is fully specified here, so a
// given (seed, stream) pair reproduces the same sequence on any platform
// with IEEE-754 doubles. Substreams for shard-parallel sampling are derived
// by mixing the shard index into the seed before state expansion.
#pragma once

#include <array>
#include <cstdint>

namespace risv2i {

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        std::uint64_t sm = seed;
        for (auto& word : state_) word = splitmix64_next(sm);
    }

    // Deterministic decorrelated child stream for shard `stream` of `seed`.
    static Xoshiro256pp substream(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t sm = seed;
        std::uint64_t mixed = splitmix64_next(sm) ^ (stream + 0x9E3779B97F4A7C15ULL);
        return Xoshiro256pp(splitmix64_next(mixed));
    }

    std::uint64_t next() {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform double in [0, 1), 53 random bits.
    double next_double() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    // Uniform double in (0, 1); never returns an exact 0 (safe under log).
    double next_open_double() {
        return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
    }

    static constexpr const char* name() { return "xoshiro256++"; }

private:
    static constexpr std::uint64_t rotl(std::uint64_t v, int k) {
        return (v << k) | (v >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_{};
};

}  // namespace risv2i
