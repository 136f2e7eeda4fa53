#pragma once

#include <cstdint>
#include <vector>

namespace fqgeom {

/// splitmix64: 64-bit state advances by a fixed odd constant, output is the
/// xor-shift-multiply finalizer of the new state. The exact constants are part
/// of the reproducibility contract (see README); any implementation in any
/// language that follows them reproduces the same streams.
class SplitMix64 {
public:
    explicit SplitMix64(uint64_t seed) : state_(seed) {}

    static uint64_t mix(uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    /// Uniform draw in [0, n) by rejection; no modulo bias.
    uint64_t next_below(uint64_t n);

    /// Derived seed for an independent sub-stream (scan cells, test trials).
    static uint64_t derive(uint64_t seed, uint64_t index) { return mix(seed ^ index); }

private:
    uint64_t state_;
};

/// First m entries of a seeded Fisher-Yates shuffle of {0,...,n-1}:
/// a uniform sample without replacement.
std::vector<uint64_t> sample_without_replacement(uint64_t n, uint64_t m, SplitMix64& rng);

}  // namespace fqgeom
