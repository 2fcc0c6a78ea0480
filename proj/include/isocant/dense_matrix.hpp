#pragma once

#include <utility>
#include <vector>

#include "isocant/rational.hpp"

namespace isocant {

template <typename T>
struct DenseMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<T> data; // row major

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c) {
        if (r < 0 || c < 0) throw BadParams("negative matrix dimension");
    }

    T& operator()(int i, int j) { return data[static_cast<std::size_t>(i) * cols + j]; }
    const T& operator()(int i, int j) const {
        return data[static_cast<std::size_t>(i) * cols + j];
    }

    static DenseMatrix identity(int d) {
        DenseMatrix m(d, d);
        for (int i = 0; i < d; ++i) m(i, i) = T(1);
        return m;
    }

    DenseMatrix transpose() const {
        DenseMatrix t(cols, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    std::vector<T> column(int j) const {
        std::vector<T> c(rows);
        for (int i = 0; i < rows; ++i) c[i] = (*this)(i, j);
        return c;
    }

    friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;
};

template <typename T>
DenseMatrix<T> operator*(const DenseMatrix<T>& a, const DenseMatrix<T>& b) {
    if (a.cols != b.rows) throw DimensionMismatch("matrix product shape mismatch");
    DenseMatrix<T> out(a.rows, b.cols);
    for (int i = 0; i < a.rows; ++i)
        for (int j = 0; j < b.cols; ++j) {
            T acc{};
            for (int k = 0; k < a.cols; ++k) acc = acc + a(i, k) * b(k, j);
            out(i, j) = acc;
        }
    return out;
}

// Exact determinant: rows are scaled to integers, then Bareiss
// fraction-free elimination keeps every intermediate an integer minor.
inline Rational dense_det(const DenseMatrix<Rational>& m) {
    if (m.rows != m.cols) throw NotSquare("determinant of a non-square matrix");
    const int n = m.rows;
    if (n == 0) return 1;

    BigInt scale = 1;
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    for (int i = 0; i < n; ++i) {
        BigInt row_lcm = 1;
        for (int j = 0; j < n; ++j) row_lcm = lcm(row_lcm, den(m(i, j)));
        scale *= row_lcm;
        for (int j = 0; j < n; ++j) a[i][j] = num(m(i, j)) * (row_lcm / den(m(i, j)));
    }

    int sign = 1;
    BigInt prev = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            int pivot = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) {
                    pivot = r;
                    break;
                }
            if (pivot < 0) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return Rational(sign * a[n - 1][n - 1], scale);
}

} // namespace isocant
