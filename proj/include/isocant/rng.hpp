#pragma once

#include <cstdint>

namespace isocant {

// Counter-based splitmix64: the value at counter i is the splitmix64
// finalizer applied to seed + (i+1) * golden gamma. Any sample can be
// drawn at any time from its index alone, so chunked or out-of-order
// evaluation cannot change a stream.
struct SplitMix64 {
    std::uint64_t seed = 0;

    std::uint64_t at(std::uint64_t i) const {
        std::uint64_t z = seed + (i + 1) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Top 53 bits: the numerator of a dyadic rational in [0, 1).
    std::uint64_t mantissa53(std::uint64_t i) const { return at(i) >> 11; }

    double uniform01(std::uint64_t i) const {
        return static_cast<double>(mantissa53(i)) * 0x1.0p-53;
    }

    // Integer in [0, n) by the multiply-shift reduction.
    std::uint64_t below(std::uint64_t i, std::uint64_t n) const {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(at(i)) * n) >> 64);
    }
};

} // namespace isocant
