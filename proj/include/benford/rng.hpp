#pragma once

#include <array>
#include <cstdint>

// splitmix64 and xoshiro256++, after the public-domain reference
// implementations by Blackman and Vigna (prng.di.unimi.it). Fixed here so
// seeded runs are reproducible across platforms.

namespace benford {

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

private:
    std::uint64_t state_;
};

class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) {
        SplitMix64 sm(seed);
        for (auto& word : state_) word = sm.next();
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

    // Uniform in [0,1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) {
        return (x << k) | (x >> (64 - k));
    }

    std::array<std::uint64_t, 4> state_;
};

// Seed for an independent sampling chunk: the splitmix64 output at state
// seed + chunk_index * gamma (one jump-ahead step), so any chunk can be
// generated without walking its predecessors.
inline std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk_index) {
    return SplitMix64(seed + chunk_index * 0x9E3779B97F4A7C15ULL).next();
}

} // namespace benford
