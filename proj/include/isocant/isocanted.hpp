#pragma once

#include <algorithm>
#include <vector>

#include "isocant/halfspace.hpp"

namespace isocant {

// The body cut from the cube [-ell/2, ell/2]^d by |x_j - x_k| <= ell - a:
// every cube edge is canted by the same amount a.
struct IsocantedParams {
    int d = 2;
    Rational ell{1};
    Rational a{0};

    IsocantedParams(int dim, Rational side, Rational cant)
        : d(dim), ell(std::move(side)), a(std::move(cant)) {
        if (d < 2) throw BadParams("isocanted cube needs d >= 2");
        if (!(ell > 0)) throw BadParams("isocanted cube needs ell > 0");
        if (!(a >= 0 && a < ell)) throw BadParams("isocanted cube needs 0 <= a < ell");
    }
};

// 2d box constraints, then one constraint x_j - x_k <= ell - a for each
// ordered pair: d(d+1) halfspaces in all.
inline HalfspaceSystem halfspaces(const IsocantedParams& p) {
    HalfspaceSystem sys;
    sys.dim = p.d;
    sys.halfspaces.reserve(static_cast<std::size_t>(p.d) * (p.d + 1));
    for (int j = 0; j < p.d; ++j) {
        Point plus(p.d, Rational(0));
        plus[j] = 1;
        Point minus(p.d, Rational(0));
        minus[j] = -1;
        sys.halfspaces.push_back({std::move(plus), p.ell / 2});
        sys.halfspaces.push_back({std::move(minus), p.ell / 2});
    }
    for (int j = 0; j < p.d; ++j)
        for (int k = 0; k < p.d; ++k) {
            if (j == k) continue;
            Point n(p.d, Rational(0));
            n[j] = 1;
            n[k] = -1;
            sys.halfspaces.push_back({std::move(n), p.ell - p.a});
        }
    return sys;
}

// Segment generators of the zonotope decomposition: (ell-a)/2 e_i for each
// coordinate plus the diagonal a/2 (1, ..., 1).
inline std::vector<Point> generators(const IsocantedParams& p) {
    std::vector<Point> out;
    out.reserve(p.d + 1);
    for (int i = 0; i < p.d; ++i) {
        Point g(p.d, Rational(0));
        g[i] = (p.ell - p.a) / 2;
        out.push_back(std::move(g));
    }
    out.emplace_back(p.d, p.a / 2);
    return out;
}

// {+-v_I : empty != I subseteq [d]} with v_I = ell/2 on I and a - ell/2
// off I; masks ascending, positive sign block first.
inline std::vector<Point> vertices(const IsocantedParams& p) {
    if (!(p.a > 0)) throw BadParams("vertex parameterization needs a > 0");
    if (p.d > 24) throw DimensionTooLarge("vertex enumeration capped at d = 24");
    std::vector<Point> out;
    out.reserve((std::size_t{2} << p.d) - 2);
    for (int sign = 0; sign < 2; ++sign)
        for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << p.d); ++mask) {
            Point v(p.d);
            for (int i = 0; i < p.d; ++i) {
                Rational value = (mask & (std::uint32_t{1} << i)) ? Rational(p.ell / 2)
                                                                  : Rational(p.a - p.ell / 2);
                v[i] = sign ? -value : value;
            }
            out.push_back(std::move(v));
        }
    return out;
}

// Equivalent to the halfspace test, in O(d): the pair constraints reduce
// to max_j x_j - min_j x_j <= ell - a.
inline bool contains(const IsocantedParams& p, const Point& x) {
    if (static_cast<int>(x.size()) != p.d)
        throw DimensionMismatch("point dimension does not match body");
    const Rational half = p.ell / 2;
    for (const auto& c : x)
        if (c > half || c < -half) return false;
    auto [lo, hi] = std::minmax_element(x.begin(), x.end());
    return *hi - *lo <= p.ell - p.a;
}

inline Rational volume(const IsocantedParams& p) {
    return rational_pow(p.ell - p.a, p.d - 1) * (p.ell + (p.d - 1) * p.a);
}

// Chance that d+1 independent uniform arrivals on a unit hour all pairwise
// overlap when each stays `wait` of the hour: the isocanted cube volume at
// ell = 1, a = 1 - wait.
inline Rational meeting_probability(int d, const Rational& wait) {
    if (!(wait > 0 && wait <= 1)) throw BadParams("waiting time must lie in (0, 1]");
    return volume(IsocantedParams(d, 1, 1 - wait));
}

} // namespace isocant
