#pragma once

#include <cstdint>

namespace rainbow {

/// SplitMix64: the reference 64-bit mixing generator (Steele, Lea & Flood's
/// SplittableRandom stepping function). Chosen because its output stream is
/// fully specified by the seed, identically on every platform, and because a
/// child stream can be forked off with split(). Known-answer vectors live in
/// the tests and the README.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Unbiased draw from 0..bound-1 by rejection sampling; bound must be
    /// positive.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t r = next();
            if (r >= threshold) return r % bound;
        }
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Child generator seeded with the next output.
    SplitMix64 split() { return SplitMix64(next()); }

private:
    std::uint64_t state_;
};

}  // namespace rainbow
