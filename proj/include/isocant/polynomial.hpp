#pragma once

#include <span>
#include <vector>

#include "isocant/rational.hpp"

namespace isocant {

// Coefficients in ascending order of degree, trailing zeros trimmed.
struct Polynomial {
    std::vector<Rational> coeffs;

    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> c) : coeffs(std::move(c)) { trim(); }

    void trim() {
        while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
    }

    // Degree of the zero polynomial is -1.
    int degree() const { return static_cast<int>(coeffs.size()) - 1; }

    Rational operator()(const Rational& x) const {
        Rational value = 0;
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
            value = value * x + *it;
        return value;
    }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

// Number of sign changes in the sequence, zeros skipped.
inline int sign_changes(std::span<const Rational> coeffs) {
    int changes = 0;
    int previous = 0;
    for (const auto& c : coeffs) {
        int s = c == 0 ? 0 : (c > 0 ? 1 : -1);
        if (s == 0) continue;
        if (previous != 0 && s != previous) ++changes;
        previous = s;
    }
    return changes;
}

inline int sign_changes(const std::vector<Rational>& coeffs) {
    return sign_changes(std::span<const Rational>(coeffs));
}

inline int sign_changes(const Polynomial& p) { return sign_changes(p.coeffs); }

} // namespace isocant
