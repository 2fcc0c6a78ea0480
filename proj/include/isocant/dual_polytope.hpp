#pragma once

#include <algorithm>
#include <bit>
#include <utility>
#include <vector>

#include "isocant/combinatorics.hpp"
#include "isocant/halfspace.hpp"
#include "isocant/isocanted.hpp"
#include "isocant/roofs.hpp"

namespace isocant {

// Polar dual of the isocanted cube, parameterized by b = 1/(ell - a) and
// c = 2/ell.
struct DualParams {
    int d = 2;
    Rational b{1};
    Rational c{1};

    DualParams(int dim, Rational b_, Rational c_) : d(dim), b(std::move(b_)), c(std::move(c_)) {
        if (d < 2) throw BadParams("dual body needs d >= 2");
        if (!(b > 0 && c > 0)) throw BadParams("dual body needs b > 0 and c > 0");
    }
};

inline DualParams from_primal(const IsocantedParams& p) {
    return {p.d, Rational(1) / (p.ell - p.a), Rational(2) / p.ell};
}

// Inverts b = 1/(ell-a), c = 2/ell; needs b >= c/2 so that a >= 0.
inline IsocantedParams to_primal(const DualParams& p) {
    if (p.b < p.c / 2) throw BadParams("no primal body: needs b >= c/2");
    return {p.d, Rational(2) / p.c, (2 * p.b - p.c) / (p.b * p.c)};
}

// Vertex m_{i,j} of the dual, indices in [d] union {0}, i != j:
// c e_i when j = 0, -c e_j when i = 0, b (e_i - e_j) otherwise.
struct Molecule {
    int i = 0;
    int j = 1;
    Point coords;

    friend bool operator==(const Molecule&, const Molecule&) = default;
};

inline Molecule molecule(const DualParams& p, int i, int j) {
    if (i == j || i < 0 || j < 0 || i > p.d || j > p.d)
        throw BadParams("molecule needs distinct indices in [d] union {0}");
    Point x(p.d, Rational(0));
    if (j == 0)
        x[i - 1] = p.c;
    else if (i == 0)
        x[j - 1] = -p.c;
    else {
        x[i - 1] = p.b;
        x[j - 1] = -p.b;
    }
    return {i, j, std::move(x)};
}

// All (d+1)d vertices, ordered by (i, j) lexicographically.
inline std::vector<Molecule> molecules(const DualParams& p) {
    std::vector<Molecule> out;
    out.reserve(static_cast<std::size_t>(p.d + 1) * p.d);
    for (int i = 0; i <= p.d; ++i)
        for (int j = 0; j <= p.d; ++j)
            if (i != j) out.push_back(molecule(p, i, j));
    return out;
}

inline Surd molecule_distance(const Molecule& x, const Molecule& y) {
    if (x.coords.size() != y.coords.size())
        throw DimensionMismatch("molecules of different dimension");
    Rational square = 0;
    for (std::size_t k = 0; k < x.coords.size(); ++k) {
        Rational delta = x.coords[k] - y.coords[k];
        square += delta * delta;
    }
    return sqrt_of_rational(square);
}

// f_k = (2^{k+2} - 2) C(d+1, k+2) for 0 <= k <= d-1.
inline std::vector<BigInt> f_vector(int d) {
    if (d < 1) throw BadParams("f-vector needs d >= 1");
    std::vector<BigInt> f(d);
    for (int k = 0; k < d; ++k) f[k] = ((BigInt(1) << (k + 2)) - 2) * binomial(d + 1, k + 2);
    return f;
}

// Facet of the dual body: a nonempty subset mask of [d] plus a sign. The
// full mask names the pair of extraordinary facets.
struct FacetId {
    std::uint32_t mask = 1;
    int sign = 1;

    friend bool operator==(const FacetId&, const FacetId&) = default;
};

namespace detail {

inline void check_facet(const DualParams& p, const FacetId& f) {
    if (p.d > 24) throw DimensionTooLarge("facet enumeration capped at d = 24");
    if (f.sign != 1 && f.sign != -1) throw BadFacet("facet sign must be +-1");
    if (f.mask == 0 || f.mask >= (std::uint32_t{1} << p.d))
        throw BadFacet("facet mask must be a nonempty subset of [d]");
}

} // namespace detail

// Masks ascending, + before -; the last pair is extraordinary.
inline std::vector<FacetId> facet_ids(const DualParams& p) {
    if (p.d > 24) throw DimensionTooLarge("facet enumeration capped at d = 24");
    std::vector<FacetId> out;
    out.reserve((std::size_t{2} << p.d) - 2);
    for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << p.d); ++mask) {
        out.push_back({mask, 1});
        out.push_back({mask, -1});
    }
    return out;
}

// Supporting halfspace <normal, x> <= offset, tight exactly on the facet.
// Ordinary (I,+) lies on b sum_I x + (b-c) sum_{I^c} x = -bc, so the
// emitted normal for sign + is the negated coefficient vector.
inline Halfspace facet_hyperplane(const DualParams& p, const FacetId& f) {
    detail::check_facet(p, f);
    const bool extraordinary = f.mask + 1 == (std::uint32_t{1} << p.d);
    Point normal(p.d);
    Rational offset;
    if (extraordinary) {
        for (auto& x : normal) x = Rational(-f.sign);
        offset = p.c;
    } else {
        for (int k = 0; k < p.d; ++k) {
            Rational coeff = (f.mask & (std::uint32_t{1} << k)) ? p.b : p.b - p.c;
            normal[k] = -f.sign * coeff;
        }
        offset = p.b * p.c;
    }
    return {std::move(normal), std::move(offset)};
}

inline HalfspaceSystem dual_halfspaces(const DualParams& p) {
    HalfspaceSystem sys;
    sys.dim = p.d;
    for (const auto& f : facet_ids(p)) sys.halfspaces.push_back(facet_hyperplane(p, f));
    return sys;
}

// Vertex set of a facet: (I,+) holds the molecules m_{j,i} with i in I and
// j outside (0 allowed); (I,-) holds their antipodes m_{i,j}. The
// extraordinary pair takes m_{0,k} respectively m_{k,0}.
inline std::vector<Molecule> facet_vertices(const DualParams& p, const FacetId& f) {
    detail::check_facet(p, f);
    const bool extraordinary = f.mask + 1 == (std::uint32_t{1} << p.d);
    std::vector<Molecule> out;
    if (extraordinary) {
        for (int k = 1; k <= p.d; ++k)
            out.push_back(f.sign > 0 ? molecule(p, 0, k) : molecule(p, k, 0));
        return out;
    }
    for (int i = 1; i <= p.d; ++i) {
        if (!(f.mask & (std::uint32_t{1} << (i - 1)))) continue;
        for (int j = 0; j <= p.d; ++j) {
            if (j == i || (j > 0 && (f.mask & (std::uint32_t{1} << (j - 1))))) continue;
            out.push_back(f.sign > 0 ? molecule(p, j, i) : molecule(p, i, j));
        }
    }
    return out;
}

// O(d) membership: with t = sum x and s_I = sum_I x, each ordinary facet
// constraint reads |c s_I + (b-c) t| <= bc, so only the extreme proper
// nonempty subset sums matter.
inline bool dual_contains(const DualParams& p, const Point& x) {
    if (static_cast<int>(x.size()) != p.d)
        throw DimensionMismatch("point dimension does not match body");
    Rational total = 0;
    for (const auto& v : x) total += v;
    if (total > p.c || -total > p.c) return false;

    Rational positive = 0, negative = 0;
    Rational largest = x[0], smallest = x[0];
    int positives = 0, negatives = 0;
    for (const auto& v : x) {
        if (v > 0) {
            positive += v;
            ++positives;
        } else if (v < 0) {
            negative += v;
            ++negatives;
        }
        largest = std::max(largest, v);
        smallest = std::min(smallest, v);
    }
    // Extreme sums over proper nonempty subsets: all positive coordinates
    // when that set is proper, otherwise drop the worst single coordinate.
    Rational max_sum = positives == 0 ? largest
                       : positives == p.d ? total - smallest
                                          : positive;
    Rational min_sum = negatives == 0 ? smallest
                       : negatives == p.d ? total - largest
                                          : negative;

    const Rational bc = p.b * p.c;
    const Rational drift = (p.b - p.c) * total;
    if (p.c * max_sum + drift > bc) return false;
    if (p.c * min_sum + drift < -bc) return false;
    return true;
}

// Distance from the origin to an ordinary facet hyperplane with |I| = V,
// or to the extraordinary one when V = d: bc / rad with
// rad = sqrt(V b^2 + (d-V)(b-c)^2).
inline Surd hyperplane_origin_distance(const DualParams& p, int V) {
    if (V < 1 || V > p.d) throw BadParams("facet size must lie in [1, d]");
    Rational rad_square = V * p.b * p.b + (p.d - V) * (p.b - p.c) * (p.b - p.c);
    if (V == p.d) return Surd(p.c) * inverse(sqrt_of_integer(p.d));
    return Surd(p.b * p.c) / sqrt_of_rational(rad_square);
}

// Every ordinary facet is a roof over its molecule set: crest edge
// sqrt(2) c, base edges sqrt(2) b, height rad / sqrt((d-V) V).
inline RoofSpec facet_roof_spec(const DualParams& p, const FacetId& f) {
    detail::check_facet(p, f);
    if (f.mask + 1 == (std::uint32_t{1} << p.d))
        throw BadFacet("extraordinary facets are simplices, not roofs");
    const int V = std::popcount(f.mask);
    const int C = p.d - V;
    Rational rad_square = V * p.b * p.b + C * (p.b - p.c) * (p.b - p.c);
    Surd height = sqrt_of_rational(rad_square) / sqrt_of_integer(BigInt(C) * V);
    Surd sqrt2 = sqrt_of_integer(2);
    return RoofSpec(C, V, sqrt2 * p.b, sqrt2 * p.c, height);
}

// c^d / d!, the volume of the pyramid over an extraordinary facet.
inline Rational pyramid_volume_extraordinary(int d, const Rational& c) {
    if (d < 1) throw BadParams("pyramid needs d >= 1");
    return rational_pow(c, d) / Rational(factorial(d));
}

// (1/d!) sum_n C(d-V-1+n, n) b^{d-V+n} c^{V-n}, the volume of the pyramid
// from the origin over an ordinary facet with |I| = V.
inline Rational pyramid_volume_ordinary(int d, const Rational& b, const Rational& c, int V) {
    if (V < 1 || V >= d) throw BadParams("ordinary facet size must lie in [1, d-1]");
    Rational sum = 0;
    for (int n = 0; n < V; ++n)
        sum += Rational(binomial(d - V - 1 + n, n)) * rational_pow(b, d - V + n) *
               rational_pow(c, V - n);
    return sum / Rational(factorial(d));
}

// (2/d!) sum_j C(d+j-1, j) b^j c^{d-j}.
inline Rational dual_volume(const DualParams& p) {
    Rational sum = 0;
    for (int j = 0; j < p.d; ++j)
        sum += Rational(binomial(p.d + j - 1, j)) * rational_pow(p.b, j) *
               rational_pow(p.c, p.d - j);
    return 2 * sum / Rational(factorial(p.d));
}

// Dual volume written in (ell, a); valid down to the cube limit a = 0.
inline Rational dual_volume_primal_params(int d, const Rational& ell, const Rational& a) {
    if (d < 2) throw BadParams("dual body needs d >= 2");
    if (!(ell > 0 && a >= 0 && a < ell)) throw BadParams("needs 0 <= a < ell");
    Rational ratio = ell / (2 * (ell - a));
    Rational sum = 0;
    for (int j = 0; j < d; ++j) sum += Rational(binomial(d + j - 1, j)) * rational_pow(ratio, j);
    return rational_pow(Rational(2) / ell, d) * 2 * sum / Rational(factorial(d));
}

// The d+1 points {0} union [d] with d(0, j) = ell/2 and d(i, j) = ell - a;
// the dual body is the tight span unit ball shape for this metric.
inline DenseMatrix<Rational> metric_space(int d, const Rational& ell, const Rational& a) {
    if (d < 1) throw BadParams("metric space needs d >= 1");
    if (!(ell > 0 && a >= 0 && a < ell)) throw BadParams("needs 0 <= a < ell");
    DenseMatrix<Rational> m(d + 1, d + 1);
    for (int i = 0; i <= d; ++i)
        for (int j = 0; j <= d; ++j) {
            if (i == j) continue;
            m(i, j) = (i == 0 || j == 0) ? Rational(ell / 2) : Rational(ell - a);
        }
    return m;
}

// Buneman four-point condition: for every quadruple, the two largest of
// the three pairings d(p,q)+d(r,s), d(p,r)+d(q,s), d(p,s)+d(q,r) agree.
inline bool four_point_check(const DenseMatrix<Rational>& m) {
    if (m.rows != m.cols) throw NotSquare("distance matrix must be square");
    const int n = m.rows;
    for (int i = 0; i < n; ++i) {
        if (m(i, i) != 0) throw BadParams("distance matrix needs zero diagonal");
        for (int j = 0; j < n; ++j)
            if (m(i, j) != m(j, i)) throw BadParams("distance matrix must be symmetric");
    }
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            for (int r = q + 1; r < n; ++r)
                for (int s = r + 1; s < n; ++s) {
                    Rational sums[3] = {m(p, q) + m(r, s), m(p, r) + m(q, s),
                                        m(p, s) + m(q, r)};
                    std::sort(sums, sums + 3);
                    if (sums[1] != sums[2]) return false;
                }
    return true;
}

} // namespace isocant
