#pragma once

#include <cstdint>
#include <cmath>
#include <numeric>
#include <string>

#include "isocant/rational.hpp"

namespace isocant {

namespace detail {

// Trial-division bound B chosen so that B^3 > 2^63: any leftover cofactor
// below 2^63 with no prime factor <= B is prime, a product of two distinct
// primes, or a perfect square, hence handled exactly.
inline constexpr std::uint64_t kTrialBound = 2'200'000;

inline constexpr std::uint64_t kRadicandLimit =
    static_cast<std::uint64_t>(INT64_MAX);

struct SquarefreeSplit {
    BigInt root;             // largest s with s^2 | n
    std::int64_t squarefree; // n / s^2
};

// n = root^2 * squarefree. Throws Overflow when the squarefree part would
// exceed the 64-bit radicand limit.
inline SquarefreeSplit factor_squarefree(BigInt n) {
    if (n <= 0) throw BadParams("radicand must be positive");
    SquarefreeSplit out{1, 1};
    BigInt squarefree_big = 1;

    auto strip = [&](std::uint64_t p, auto& value) {
        int exponent = 0;
        while (value % p == 0) {
            value /= p;
            ++exponent;
        }
        for (int i = 0; i < exponent / 2; ++i) out.root *= p;
        if (exponent & 1) squarefree_big *= p;
    };

    std::uint64_t p = 2;
    while (n > 1 && BigInt(p) * p <= n && p <= kTrialBound) {
        if (n <= kRadicandLimit) break; // switch to the native loop
        strip(p, n);
        p = (p == 2) ? 3 : p + 2;
    }
    if (n > 1 && n <= kRadicandLimit) {
        std::uint64_t m = n.convert_to<std::uint64_t>();
        while (m > 1 && p * p <= m && p <= kTrialBound) {
            strip(p, m);
            p = (p == 2) ? 3 : p + 2;
        }
        n = m;
    }
    if (n > 1) {
        BigInt s = sqrt(n);
        if (s * s == n)
            out.root *= s;
        else
            squarefree_big *= n; // squarefree: no factor <= B and below B^3
    }
    if (squarefree_big > kRadicandLimit)
        throw Overflow("squarefree radicand exceeds 2^63-1: " + squarefree_big.str());
    out.squarefree = squarefree_big.convert_to<std::int64_t>();
    return out;
}

} // namespace detail

// coef * sqrt(radicand) with radicand squarefree and positive; the zero
// value is pinned to radicand 1 so equality is plain member comparison.
struct Surd {
    Rational coef{0};
    std::int64_t radicand{1};

    Surd() = default;
    Surd(const Rational& value) : coef(value) {}
    Surd(int value) : coef(value) {}

    Surd(const Rational& c, const BigInt& n) {
        if (c == 0 || n == 0) return;
        auto split = detail::factor_squarefree(n);
        coef = c * Rational(split.root);
        radicand = split.squarefree;
    }

    // Trusted path for radicands already known squarefree.
    static Surd raw(Rational c, std::int64_t n) {
        Surd s;
        if (c != 0) {
            s.coef = std::move(c);
            s.radicand = n;
        }
        return s;
    }

    bool is_zero() const { return coef == 0; }
    bool is_rational() const { return radicand == 1; }

    // coef^2 * radicand, the exact square.
    Rational square() const { return coef * coef * radicand; }

    friend bool operator==(const Surd&, const Surd&) = default;
};

inline Surd sqrt_of_rational(const Rational& r) {
    if (r < 0) throw BadParams("square root of a negative rational");
    if (r == 0) return Surd{};
    return Surd(Rational(1, den(r)), num(r) * den(r));
}

inline Surd sqrt_of_integer(const BigInt& n) { return sqrt_of_rational(Rational(n)); }

inline Surd operator-(const Surd& x) { return Surd::raw(-x.coef, x.radicand); }

inline Surd operator+(const Surd& x, const Surd& y) {
    if (x.is_zero()) return y;
    if (y.is_zero()) return x;
    if (x.radicand != y.radicand)
        throw IncompatibleRadicands("sqrt(" + std::to_string(x.radicand) + ") + sqrt(" +
                                    std::to_string(y.radicand) + ") is not a surd");
    return Surd::raw(x.coef + y.coef, x.radicand);
}

inline Surd operator-(const Surd& x, const Surd& y) { return x + (-y); }

inline Surd operator*(const Surd& x, const Surd& y) {
    if (x.is_zero() || y.is_zero()) return Surd{};
    // Both radicands are squarefree, so n1*n2 = g^2 * (n1/g) * (n2/g) with
    // g = gcd and the cofactors coprime; no refactoring needed.
    std::int64_t g = std::gcd(x.radicand, y.radicand);
    BigInt cofactors = BigInt(x.radicand / g) * (y.radicand / g);
    if (cofactors > detail::kRadicandLimit)
        throw Overflow("product radicand exceeds 2^63-1");
    return Surd::raw(x.coef * y.coef * g, cofactors.convert_to<std::int64_t>());
}

inline Surd operator*(const Surd& x, const Rational& s) {
    return Surd::raw(x.coef * s, x.radicand);
}

inline Surd operator*(const Rational& s, const Surd& x) { return x * s; }

inline Surd inverse(const Surd& x) {
    if (x.is_zero()) throw BadParams("inverse of zero surd");
    // 1 / (c sqrt(n)) = (1 / (c n)) sqrt(n)
    return Surd::raw(Rational(1) / (x.coef * x.radicand), x.radicand);
}

inline Surd operator/(const Surd& x, const Surd& y) { return x * inverse(y); }

inline Surd surd_pow(const Surd& x, long e) {
    if (e < 0) return surd_pow(inverse(x), -e);
    Surd result{Rational(1)};
    Surd base = x;
    for (unsigned long k = static_cast<unsigned long>(e); k != 0; k >>= 1) {
        if (k & 1) result = result * base;
        base = base * base;
    }
    return result;
}

inline double to_double(const Surd& x) {
    return to_double(x.coef) * std::sqrt(static_cast<double>(x.radicand));
}

// "p/q*sqrt(n)", with the sqrt factor omitted for rational values.
inline std::string to_string(const Surd& x) {
    std::string s = to_string(x.coef);
    if (x.radicand != 1) s += "*sqrt(" + std::to_string(x.radicand) + ")";
    return s;
}

} // namespace isocant
