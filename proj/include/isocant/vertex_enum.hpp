#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "isocant/halfspace.hpp"

namespace isocant {

namespace detail {

// Row echelon rank of a rational matrix, destructive.
inline int rational_rank(std::vector<Point> rows) {
    if (rows.empty()) return 0;
    const int cols = static_cast<int>(rows[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = rank + 1; r < static_cast<int>(rows.size()); ++r) {
            if (rows[r][c] == 0) continue;
            Rational f = rows[r][c] / rows[rank][c];
            for (int j = c; j < cols; ++j) rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

// Unique solution of a square rational system, or nullopt when singular.
inline std::optional<Point> solve_square(std::vector<Point> a, Point b) {
    const int n = static_cast<int>(b.size());
    for (int c = 0; c < n; ++c) {
        int pivot = -1;
        for (int r = c; r < n; ++r)
            if (a[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) return std::nullopt;
        std::swap(a[c], a[pivot]);
        std::swap(b[c], b[pivot]);
        for (int r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (int j = c; j < n; ++j) a[r][j] -= f * a[c][j];
            b[r] -= f * b[c];
        }
    }
    Point x(n);
    for (int i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

// One-dimensional null space direction of a (d-1) x d system of full row
// rank, or nullopt when the rank drops.
inline std::optional<Point> nullspace_direction(std::vector<Point> rows, int dim) {
    const int m = static_cast<int>(rows.size());
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < dim && rank < m; ++c) {
        int pivot = -1;
        for (int r = rank; r < m; ++r)
            if (rows[r][c] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        for (int r = 0; r < m; ++r) {
            if (r == rank || rows[r][c] == 0) continue;
            Rational f = rows[r][c] / rows[rank][c];
            for (int j = 0; j < dim; ++j) rows[r][j] -= f * rows[rank][j];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    if (rank != dim - 1) return std::nullopt;
    int free_col = 0;
    while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end())
        ++free_col;
    Point r(dim, Rational(0));
    r[free_col] = 1;
    for (int k = 0; k < rank; ++k)
        r[pivot_col[k]] = -rows[k][free_col] / rows[k][pivot_col[k]];
    return r;
}

} // namespace detail

// Exact vertex enumeration for a bounded halfspace system by basis
// enumeration: every d-subset of halfspaces is solved as equalities and
// the feasible intersection points are deduplicated. Sorted
// lexicographically. A nontrivial recession direction raises Unbounded.
inline std::vector<Point> lp_vertices(const HalfspaceSystem& sys) {
    const int d = sys.dim;
    const int m = static_cast<int>(sys.halfspaces.size());
    if (d < 1) throw BadParams("vertex enumeration needs dim >= 1");
    if (d > 4) throw DimensionTooLarge("vertex enumeration oracle capped at d = 4");

    std::vector<Point> rows;
    rows.reserve(m);
    for (const auto& h : sys.halfspaces) {
        if (static_cast<int>(h.normal.size()) != d)
            throw DimensionMismatch("halfspace dimension does not match system");
        rows.push_back(h.normal);
    }

    // A line in the feasible set (lineality) is unbounded regardless of
    // which inequalities are tight.
    if (detail::rational_rank(rows) < d)
        throw Unbounded("halfspace normals do not span; feasible set cannot be bounded");

    // Pointed recession cone: any extreme ray is the null direction of
    // d-1 of the normals, so enumerate those.
    std::vector<int> pick;
    auto next_subset = [&](std::vector<int>& p, int k) {
        int i = k - 1;
        while (i >= 0 && p[i] == m - k + i) --i;
        if (i < 0) return false;
        ++p[i];
        for (int j = i + 1; j < k; ++j) p[j] = p[j - 1] + 1;
        return true;
    };
    if (d >= 2 && m >= d - 1) {
        pick.resize(d - 1);
        for (int i = 0; i < d - 1; ++i) pick[i] = i;
        do {
            std::vector<Point> sub;
            for (int idx : pick) sub.push_back(sys.halfspaces[idx].normal);
            auto ray = detail::nullspace_direction(std::move(sub), d);
            if (!ray) continue;
            for (const Point& r : {*ray, [&] {
                                       Point neg = *ray;
                                       for (auto& x : neg) x = -x;
                                       return neg;
                                   }()}) {
                bool receding = true;
                for (const auto& h : sys.halfspaces)
                    if (dot(h.normal, r) > 0) {
                        receding = false;
                        break;
                    }
                if (receding) throw Unbounded("recession direction found");
            }
        } while (next_subset(pick, d - 1));
    } else if (d == 1) {
        bool upper = false, lower = false;
        for (const auto& h : sys.halfspaces) {
            if (h.normal[0] > 0) upper = true;
            if (h.normal[0] < 0) lower = true;
        }
        if (!upper || !lower) throw Unbounded("one-dimensional system lacks a bound");
    }

    std::vector<Point> found;
    pick.assign(d, 0);
    for (int i = 0; i < d; ++i) pick[i] = i;
    if (m >= d) do {
            std::vector<Point> a;
            Point b;
            for (int idx : pick) {
                a.push_back(sys.halfspaces[idx].normal);
                b.push_back(sys.halfspaces[idx].offset);
            }
            auto x = detail::solve_square(std::move(a), std::move(b));
            if (x && sys.contains(*x)) found.push_back(std::move(*x));
        } while (next_subset(pick, d));

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());
    return found;
}

} // namespace isocant
