#pragma once

#include <string>
#include <vector>

#include "isocant/dual_polytope.hpp"
#include "isocant/isocanted.hpp"
#include "isocant/polynomial.hpp"

namespace isocant {

// vol(K) vol(K*) for the canted cube; invariant under scaling (ell, a).
inline Rational volume_product(const Rational& ell, const Rational& a, int d) {
    IsocantedParams p(d, ell, a);
    return volume(p) * dual_volume_primal_params(d, ell, a);
}

// p_d(x) = d! vol(K) vol(K*) - 4^d at the cant ratio a/ell = 1 - x.
// Closed-form coefficients: a_0 = 4d C(2d-2, d-1) - 4^d and
// a_k = 2^{k+1} (2d C(2d-k-2, d-1) - (d-1) C(2d-k-1, d-1)) for k >= 1,
// which lands on a_d = -2^{d+1} (d-1).
inline Polynomial mahler_polynomial(int d) {
    if (d < 2) throw BadParams("needs d >= 2");
    std::vector<Rational> coeffs(d + 1);
    coeffs[0] = Rational(4 * BigInt(d) * binomial(2 * d - 2, d - 1) - (BigInt(1) << (2 * d)));
    for (int k = 1; k <= d; ++k)
        coeffs[k] = Rational((BigInt(1) << (k + 1)) *
                             (2 * BigInt(d) * binomial(2 * d - k - 2, d - 1) -
                              BigInt(d - 1) * binomial(2 * d - k - 1, d - 1)));
    return Polynomial(std::move(coeffs));
}

// Largest k with a_k >= 0: floor((3d - 1) / (d + 1)), which is 2 for
// every d >= 3.
inline int k_threshold(int d) {
    if (d < 3) throw BadParams("threshold defined for d >= 3");
    return (3 * d - 1) / (d + 1);
}

// One-sided rational test that C(2d-2, d-1)^2 (d - 1/2) pi >= 16^{d-1},
// using 314159/100000 < pi; true makes the constant term a_0 nonnegative.
inline bool central_binomial_bound(int d) {
    if (d < 1) throw BadParams("needs d >= 1");
    BigInt central = binomial(2 * d - 2, d - 1);
    Rational lhs = Rational(central * central) * Rational(2 * d - 1, 2) *
                   Rational(314159, 100000);
    return lhs >= Rational(BigInt(1) << (4 * (d - 1)));
}

// Why p_d > 0 on (0, 1): after factoring out the root at 0 (if any) the
// coefficient sequence starts positive, ends negative, and changes sign
// exactly once, so by Descartes the only positive root is the one at 1.
struct MahlerCertificate {
    enum class ConstantTerm { positive, zero_factorable };

    int d = 2;
    std::vector<Rational> coefficients;
    int k_threshold = 1;
    int sign_change_count = 0;
    Rational value_at_one{0};
    ConstantTerm a0_case = ConstantTerm::positive;
    bool verdict = false;
};

inline MahlerCertificate positivity_certificate(int d) {
    Polynomial p = mahler_polynomial(d);
    MahlerCertificate cert;
    cert.d = d;
    cert.coefficients = p.coeffs;
    cert.k_threshold = (3 * d - 1) / (d + 1);
    cert.value_at_one = p(1);
    if (cert.value_at_one != 0)
        throw CertificateFailure("1 is not a root at d = " + std::to_string(d));

    std::size_t zeros = 0;
    while (zeros < p.coeffs.size() && p.coeffs[zeros] == 0) ++zeros;
    if (zeros == p.coeffs.size())
        throw CertificateFailure("zero polynomial at d = " + std::to_string(d));
    cert.a0_case = zeros > 0 ? MahlerCertificate::ConstantTerm::zero_factorable
                             : MahlerCertificate::ConstantTerm::positive;

    std::span<const Rational> cofactor(p.coeffs.data() + zeros, p.coeffs.size() - zeros);
    if (!(cofactor.front() > 0))
        throw CertificateFailure("constant term not positive after factoring at d = " +
                                 std::to_string(d));
    if (!(cofactor.back() < 0))
        throw CertificateFailure("leading coefficient not negative at d = " +
                                 std::to_string(d));
    cert.sign_change_count = sign_changes(cofactor);
    if (cert.sign_change_count != 1)
        throw CertificateFailure("sign changes != 1 at d = " + std::to_string(d));

    for (int k = 1; k <= 31; ++k)
        if (!(p(Rational(k, 32)) > 0))
            throw CertificateFailure("not positive at " + std::to_string(k) + "/32, d = " +
                                     std::to_string(d));
    cert.verdict = true;
    return cert;
}

} // namespace isocant
