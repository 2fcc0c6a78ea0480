#pragma once

#include <vector>

#include "isocant/structured_matrix.hpp"

namespace isocant {

using Point = std::vector<Rational>;

struct FacetEquation {
    Point normal;
    Rational rhs; // <normal, x> = rhs on the facet
};

namespace detail {

inline void check_par_params(const Rational& ell, const Rational& a, int d) {
    if (d < 1) throw BadParams("parallelepiped needs d >= 1");
    if (!(ell > 0 && a >= 0 && a < ell)) throw BadParams("parallelepiped needs 0 <= a < ell");
}

} // namespace detail

// Vertices of the Bose parallelepiped translated to be centrally symmetric:
// subset sums of the columns of (ell - a) I + a J, shifted by
// -(ell + (d-1) a)/2 in every coordinate. Subsets enumerate by bitmask.
inline std::vector<Point> par_vertices(const Rational& ell, const Rational& a, int d) {
    detail::check_par_params(ell, a, d);
    if (d > 24) throw DimensionTooLarge("parallelepiped vertex enumeration capped at d = 24");
    const Rational shift = -(ell + (d - 1) * a) / 2;
    std::vector<Point> out;
    out.reserve(std::size_t{1} << d);
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << d); ++mask) {
        Point v(d, shift);
        for (int i = 0; i < d; ++i)
            if (mask & (std::uint32_t{1} << i)) {
                // column i of the Bose matrix: ell at i, a elsewhere
                for (int j = 0; j < d; ++j) v[j] += (i == j) ? ell : a;
            }
        out.push_back(std::move(v));
    }
    return out;
}

// Vertices of the polar dual of the translated parallelepiped: the columns
// of +-2 M^{-1}, M the Bose matrix. Positive columns first.
inline std::vector<Point> par_polar_vertices(const Rational& ell, const Rational& a, int d) {
    detail::check_par_params(ell, a, d);
    StructuredMatrix inv = sm_inverse(bose(ell, a, d));
    std::vector<Point> out;
    out.reserve(2 * static_cast<std::size_t>(d));
    for (int sign = 0; sign < 2; ++sign)
        for (int i = 0; i < d; ++i) {
            Point v(d, 2 * inv.beta);
            v[i] += 2 * inv.alpha;
            if (sign) {
                for (auto& x : v) x = -x;
            }
            out.push_back(std::move(v));
        }
    return out;
}

// The 2d facet hyperplanes of the translated parallelepiped:
// (ell + (d-2) a) x_i - a sum_{j != i} x_j = +-(ell - a)(ell + (d-1) a)/2.
inline std::vector<FacetEquation> par_facet_equations(const Rational& ell, const Rational& a,
                                                      int d) {
    detail::check_par_params(ell, a, d);
    const Rational rhs = (ell - a) * (ell + (d - 1) * a) / 2;
    std::vector<FacetEquation> out;
    out.reserve(2 * static_cast<std::size_t>(d));
    for (int i = 0; i < d; ++i) {
        Point normal(d, -a);
        normal[i] = ell + (d - 2) * a;
        out.push_back({normal, rhs});
        out.push_back({std::move(normal), -rhs});
    }
    return out;
}

inline Rational dot(const Point& x, const Point& y) {
    if (x.size() != y.size()) throw DimensionMismatch("dot product of unequal lengths");
    Rational acc = 0;
    for (std::size_t i = 0; i < x.size(); ++i) acc += x[i] * y[i];
    return acc;
}

} // namespace isocant
