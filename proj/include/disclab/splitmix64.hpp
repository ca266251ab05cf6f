#pragma once

#include <cstdint>

namespace disclab {

// splitmix64 (Steele, Lea, Flood). Single 64-bit state, one additive
// constant; every seeded computation in the library draws from this
// generator so runs are reproducible across platforms.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform-ish draw in [0, bound). Modulo bias is irrelevant at the
    // bounds used here; the fixed definition is what matters.
    std::uint64_t next_below(std::uint64_t bound) { return next() % bound; }

    // +1 or -1 from the top bit.
    int next_sign() { return (next() >> 63) ? -1 : +1; }

    bool next_bool() { return (next() >> 63) != 0; }

private:
    std::uint64_t state_;
};

} // namespace disclab
