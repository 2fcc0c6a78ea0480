#pragma once

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "isocant/parallelepiped.hpp"
#include "isocant/rng.hpp"

namespace isocant {

struct Box {
    std::vector<std::pair<Rational, Rational>> bounds; // (lo, hi) per coordinate

    int dim() const { return static_cast<int>(bounds.size()); }

    void validate() const {
        if (bounds.empty()) throw BadBox("sampling box needs at least one coordinate");
        for (const auto& [lo, hi] : bounds)
            if (lo > hi) throw BadBox("inverted bound pair in sampling box");
    }

    Rational volume() const {
        Rational v = 1;
        for (const auto& [lo, hi] : bounds) v *= hi - lo;
        return v;
    }

    static Box centered_cube(int d, const Rational& half_width) {
        Box b;
        b.bounds.assign(d, {-half_width, half_width});
        return b;
    }
};

struct McEstimate {
    double estimate = 0;
    double std_error = 0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
};

inline constexpr std::int64_t kMantissaScale = std::int64_t{1} << 53;

// Hit-or-miss volume estimate. Sample i draws coordinate j from stream
// counter i*d + j; the predicate sees the 53-bit mantissas m_j, standing
// for the exact points x_j = lo_j + (hi_j - lo_j) * m_j / 2^53. Results
// depend only on (box, samples, seed), never on evaluation order.
template <typename MantissaPred>
McEstimate mc_volume_mantissa(const Box& box, std::uint64_t samples, std::uint64_t seed,
                              MantissaPred&& inside) {
    box.validate();
    if (samples == 0) throw BadParams("monte carlo needs at least one sample");
    const int d = box.dim();
    SplitMix64 rng{seed};
    std::vector<std::uint64_t> mantissa(d);
    std::uint64_t hits = 0;
    for (std::uint64_t i = 0; i < samples; ++i) {
        const std::uint64_t base = i * static_cast<std::uint64_t>(d);
        for (int j = 0; j < d; ++j) mantissa[j] = rng.mantissa53(base + j);
        if (inside(mantissa)) ++hits;
    }
    const double box_volume = to_double(box.volume());
    const double p = static_cast<double>(hits) / static_cast<double>(samples);
    McEstimate out;
    out.estimate = box_volume * p;
    out.std_error = box_volume * std::sqrt(p * (1 - p) / static_cast<double>(samples));
    out.samples = samples;
    out.seed = seed;
    return out;
}

// Membership-function front end: builds each sample as an exact rational
// point. Exact but slow; the body-specific integer predicates should be
// preferred for large runs.
template <typename Member>
McEstimate mc_volume(const Box& box, std::uint64_t samples, std::uint64_t seed, Member&& contains) {
    const int d = box.dim();
    Point x(d);
    return mc_volume_mantissa(box, samples, seed, [&](const std::vector<std::uint64_t>& m) {
        for (int j = 0; j < d; ++j) {
            const auto& [lo, hi] = box.bounds[j];
            x[j] = lo + (hi - lo) * Rational(BigInt(m[j]), BigInt(kMantissaScale));
        }
        return contains(x);
    });
}

} // namespace isocant
