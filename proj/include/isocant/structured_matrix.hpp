#pragma once

#include <utility>
#include <vector>

#include "isocant/dense_matrix.hpp"
#include "isocant/surd.hpp"

namespace isocant {

// alpha * I_d + beta * J_d, where J_d is the all-ones matrix. The family is
// closed under products and inverses, so everything stays O(1) per op.
struct StructuredMatrix {
    int d = 1;
    Rational alpha{0};
    Rational beta{0};

    StructuredMatrix(int dim, Rational a, Rational b)
        : d(dim), alpha(std::move(a)), beta(std::move(b)) {
        if (dim < 1) throw BadParams("structured matrix needs d >= 1");
    }

    friend bool operator==(const StructuredMatrix&, const StructuredMatrix&) = default;
};

inline StructuredMatrix sm_mul(const StructuredMatrix& x, const StructuredMatrix& y) {
    if (x.d != y.d) throw DimensionMismatch("structured matrix product shape mismatch");
    return {x.d, x.alpha * y.alpha, x.alpha * y.beta + x.beta * y.alpha + x.d * x.beta * y.beta};
}

inline Rational sm_det(const StructuredMatrix& m) {
    return rational_pow(m.alpha, m.d - 1) * (m.alpha + m.d * m.beta);
}

// (eigenvalue, multiplicity): alpha repeated d-1 times, alpha + d beta once.
inline std::vector<std::pair<Rational, int>> sm_spectrum(const StructuredMatrix& m) {
    return {{m.alpha, m.d - 1}, {m.alpha + m.d * m.beta, 1}};
}

inline StructuredMatrix sm_inverse(const StructuredMatrix& m) {
    Rational bulk = m.alpha + m.d * m.beta;
    if (m.alpha == 0 || bulk == 0) throw Singular("structured matrix has determinant 0");
    return {m.d, Rational(1) / m.alpha, -m.beta / (m.alpha * bulk)};
}

inline DenseMatrix<Rational> sm_to_dense(const StructuredMatrix& m) {
    DenseMatrix<Rational> out(m.d, m.d);
    for (int i = 0; i < m.d; ++i)
        for (int j = 0; j < m.d; ++j) out(i, j) = (i == j) ? m.alpha + m.beta : m.beta;
    return out;
}

// Gram matrix of the isocanted cube's segment generators:
// (ell - a) I + a J.
inline StructuredMatrix bose(const Rational& ell, const Rational& a, int d) {
    if (!(a >= 0 && a < ell)) throw BadParams("bose matrix needs 0 <= a < ell");
    return {d, ell - a, a};
}

// Orthogonal H_d: column j (1-based, j < d) carries j entries 1/lambda_j,
// then -j/lambda_j, then zeros, with lambda_j = sqrt(j + j^2); the last
// column is the normalized all-ones vector.
inline DenseMatrix<Surd> helmert(int d) {
    if (d < 1) throw BadParams("helmert matrix needs d >= 1");
    DenseMatrix<Surd> h(d, d);
    for (int j = 1; j < d; ++j) {
        Surd unit = inverse(sqrt_of_integer(BigInt(j) * (j + 1)));
        for (int i = 0; i < j; ++i) h(i, j - 1) = unit;
        h(j, j - 1) = unit * Rational(-j);
    }
    Surd last = inverse(sqrt_of_integer(d));
    for (int i = 0; i < d; ++i) h(i, d - 1) = last;
    return h;
}

// diag(alpha, ..., alpha, alpha + d beta), the spectrum on the Helmert basis.
inline DenseMatrix<Rational> spectrum_diagonal(const StructuredMatrix& m) {
    DenseMatrix<Rational> out(m.d, m.d);
    for (int i = 0; i < m.d; ++i) out(i, i) = m.alpha;
    out(m.d - 1, m.d - 1) = m.alpha + m.d * m.beta;
    return out;
}

// Cyclic shift sending e_i to e_{i+1}; its first column is e_2.
inline DenseMatrix<Rational> rotation_matrix(int d) {
    if (d < 1) throw BadParams("rotation matrix needs d >= 1");
    DenseMatrix<Rational> b(d, d);
    for (int j = 0; j < d; ++j) b((j + 1) % d, j) = 1;
    return b;
}

} // namespace isocant
