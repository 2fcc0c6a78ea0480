#pragma once

#include <utility>

#include "isocant/combinatorics.hpp"
#include "isocant/surd.hpp"

namespace isocant {

// Prismatoid with major base Delta_{V-1}(ell1) x Delta_{C-1}(ell1) and
// crest Delta_{V-1}(ell2) at height h; all simplices use edge-length
// convention. Dimension is V + C - 1.
struct RoofSpec {
    int C = 1;
    int V = 1;
    Surd ell1;
    Surd ell2;
    Surd h;

    RoofSpec(int c_, int v_, Surd l1, Surd l2, Surd height)
        : C(c_), V(v_), ell1(std::move(l1)), ell2(std::move(l2)), h(std::move(height)) {
        if (C < 1 || V < 1) throw BadParams("roof needs C >= 1 and V >= 1");
        if (!(ell1.coef > 0)) throw BadParams("roof needs ell1 > 0");
        if (ell2.coef < 0) throw BadParams("roof needs ell2 >= 0");
        if (!(h.coef > 0)) throw BadParams("roof needs h > 0");
    }

    int dim() const { return C + V - 1; }
};

// (1/d!) sqrt((d+1)/2^d) ell^d for the regular simplex with edge ell.
inline Surd simplex_volume(int d, const Surd& ell) {
    if (d < 0) throw BadParams("simplex dimension must be >= 0");
    Surd scale = sqrt_of_rational(Rational(d + 1, BigInt(1) << d));
    return scale * surd_pow(ell, d) * Rational(1, factorial(d));
}

inline Rational cube_volume(int d, const Rational& ell) {
    if (d < 0) throw BadParams("cube dimension must be >= 0");
    return rational_pow(ell, d);
}

// (1/d!) sqrt(2^d) ell^d for the regular cross-polytope with edge ell.
inline Surd cross_polytope_volume(int d, const Surd& ell) {
    if (d < 0) throw BadParams("cross-polytope dimension must be >= 0");
    Surd scale = sqrt_of_integer(BigInt(1) << d);
    return scale * surd_pow(ell, d) * Rational(1, factorial(d));
}

inline Surd pyramid_volume(const Surd& base, const Surd& height, int d) {
    if (d < 1) throw BadParams("pyramid dimension must be >= 1");
    return base * height * Rational(1, d);
}

// Circumradius sqrt(d / (2(d+1))) ell of the regular simplex with edge ell.
inline Surd circumradius(int d, const Surd& ell) {
    if (d < 0) throw BadParams("circumradius needs dimension >= 0");
    return sqrt_of_rational(Rational(d, 2 * (d + 1))) * ell;
}

// Slant edge from a crest vertex to a major-base vertex:
// ell3^2 = h^2 + r_{C-1}(ell1)^2 + (r_{V-1}(ell1) - r_{V-1}(ell2))^2.
inline Surd ell3(const RoofSpec& spec) {
    Surd crest_offset = circumradius(spec.V - 1, spec.ell1) - circumradius(spec.V - 1, spec.ell2);
    Rational square = spec.h.square() + circumradius(spec.C - 1, spec.ell1).square() +
                      crest_offset.square();
    return sqrt_of_rational(square);
}

// Cross-section at height fraction t = s/h: the product simplex shrinks as
// (1-t) ell1 while the crest simplex interpolates to ell2.
inline Surd section_volume(const RoofSpec& spec, const Rational& t) {
    if (!(t >= 0 && t <= 1)) throw BadParams("section fraction must lie in [0, 1]");
    Surd shrunk = spec.ell1 * (Rational(1) - t);
    Surd interpolated = shrunk + spec.ell2 * t;
    return simplex_volume(spec.V - 1, interpolated) * simplex_volume(spec.C - 1, shrunk);
}

// (h/d!) sqrt(C V / 2^{d-1}) sum_n C(C-1+n, n) ell1^{C-1+n} ell2^{V-1-n},
// the integral of section_volume over the height.
inline Surd roof_volume(const RoofSpec& spec) {
    const int d = spec.dim();
    Surd sum;
    for (int n = 0; n < spec.V; ++n) {
        Surd term = surd_pow(spec.ell1, spec.C - 1 + n) * surd_pow(spec.ell2, spec.V - 1 - n);
        sum = sum + term * Rational(binomial(spec.C - 1 + n, n));
    }
    Surd scale = sqrt_of_rational(Rational(BigInt(spec.C) * spec.V, BigInt(1) << (d - 1)));
    return spec.h * scale * sum * Rational(1, factorial(d));
}

// h (a^2 + ab + b^2) / 3 for the frustum with square bases of sides a, b.
inline Rational frustum_volume_egyptian(const Rational& a, const Rational& b, const Rational& h) {
    if (a < 0 || b < 0) throw BadParams("frustum needs nonnegative base sides");
    if (!(h > 0)) throw BadParams("frustum needs h > 0");
    return h * (a * a + a * b + b * b) / 3;
}

} // namespace isocant
