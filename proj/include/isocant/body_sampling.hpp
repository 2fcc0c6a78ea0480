#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "isocant/dual_polytope.hpp"
#include "isocant/isocanted.hpp"
#include "isocant/monte_carlo.hpp"

namespace isocant {

// Membership of the sample x_j = ell (m_j / 2^53 - 1/2) in the canted
// cube, decided on the raw mantissas: the box bounds hold by construction
// and the cant reduces to a spread test m_max - m_min <= floor of
// (ell - a) 2^53 / ell, which is exact because the spread is an integer.
struct FastIsocantedMembership {
    std::uint64_t spread_limit = 0;

    explicit FastIsocantedMembership(const IsocantedParams& p) {
        BigInt lam = numerator(p.ell) * denominator(p.a);
        BigInt alp = numerator(p.a) * denominator(p.ell);
        spread_limit = ((lam - alp) * kMantissaScale / lam).convert_to<std::uint64_t>();
    }

    bool operator()(const std::vector<std::uint64_t>& m) const {
        auto [lo, hi] = std::minmax_element(m.begin(), m.end());
        return *hi - *lo <= spread_limit;
    }
};

// Same idea for the dual body over the box [-M, M]^d with M = max(b, c).
// Writing b = beta/den, c = gamma/den, M = mu/den and u_j = 2 m_j - 2^53,
// the two membership clauses clear denominators to
//   mu |sum u| <= gamma 2^53
//   mu (gamma S + (beta - gamma) sum u) in [-beta gamma 2^53, ...]
// with S the extreme proper-subset sums; 128-bit products suffice once
// beta and gamma fit in 31 bits and d stays small.
struct FastDualMembership {
    std::int64_t beta = 1;
    std::int64_t gamma = 1;
    std::int64_t mu = 1;

    static bool applicable(const DualParams& p) {
        if (p.d > 16) return false;
        BigInt den = lcm(denominator(p.b), denominator(p.c));
        BigInt beta = numerator(p.b) * (den / denominator(p.b));
        BigInt gamma = numerator(p.c) * (den / denominator(p.c));
        const BigInt cap = BigInt(1) << 31;
        return beta < cap && gamma < cap;
    }

    explicit FastDualMembership(const DualParams& p) {
        if (!applicable(p)) throw Overflow("dual parameters too large for integer sampling");
        BigInt den = lcm(denominator(p.b), denominator(p.c));
        beta = (numerator(p.b) * (den / denominator(p.b))).convert_to<std::int64_t>();
        gamma = (numerator(p.c) * (den / denominator(p.c))).convert_to<std::int64_t>();
        mu = std::max(beta, gamma);
    }

    bool operator()(const std::vector<std::uint64_t>& m) const {
        using Wide = __int128;
        const int d = static_cast<int>(m.size());
        Wide total = 0, positive = 0, negative = 0;
        std::int64_t largest = 0, smallest = 0;
        bool first = true;
        int positives = 0, negatives = 0;
        for (const auto& raw : m) {
            std::int64_t u = 2 * static_cast<std::int64_t>(raw) - kMantissaScale;
            total += u;
            if (u > 0) {
                positive += u;
                ++positives;
            } else if (u < 0) {
                negative += u;
                ++negatives;
            }
            largest = first ? u : std::max(largest, u);
            smallest = first ? u : std::min(smallest, u);
            first = false;
        }
        const Wide sum_cap = Wide(gamma) << 53;
        if (mu * total > sum_cap || mu * total < -sum_cap) return false;

        Wide max_sum = positives == 0 ? largest : positives == d ? total - smallest : positive;
        Wide min_sum = negatives == 0 ? smallest : negatives == d ? total - largest : negative;
        const Wide facet_cap = (Wide(beta) * gamma) << 53;
        const Wide drift = Wide(beta - gamma) * total;
        if (mu * (gamma * max_sum + drift) > facet_cap) return false;
        if (mu * (gamma * min_sum + drift) < -facet_cap) return false;
        return true;
    }
};

inline McEstimate mc_isocanted_volume(const IsocantedParams& p, std::uint64_t samples,
                                      std::uint64_t seed) {
    Box box = Box::centered_cube(p.d, p.ell / 2);
    return mc_volume_mantissa(box, samples, seed, FastIsocantedMembership(p));
}

inline McEstimate mc_dual_volume(const DualParams& p, std::uint64_t samples,
                                 std::uint64_t seed) {
    Box box = Box::centered_cube(p.d, std::max(p.b, p.c));
    if (FastDualMembership::applicable(p))
        return mc_volume_mantissa(box, samples, seed, FastDualMembership(p));
    return mc_volume(box, samples, seed, [&](const Point& x) { return dual_contains(p, x); });
}

} // namespace isocant
