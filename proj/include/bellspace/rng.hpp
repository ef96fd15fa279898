// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>

namespace bellspace {

/// Seedable, splittable pseudo-random stream: splitmix64 sequences keyed by
/// (seed, substream). Every simulated run row draws from its own substream,
/// so row generation is order-independent and reproducible under parallelism.
class SplitStream {
public:
    SplitStream(std::uint64_t seed, std::uint64_t substream)
        : state_(mix(mix(seed) ^ mix(0x6A09E667F3BCC909ULL + substream))) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix_final(state_);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9E3779B97F4A7C15ULL;
        return mix_final(z);
    }
    static std::uint64_t mix_final(std::uint64_t z) {
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    std::uint64_t state_;
};

} // namespace bellspace
