#pragma once

#include <vector>

#include "isocant/dense_matrix.hpp"
#include "isocant/parallelepiped.hpp"

namespace isocant {

// Volume of the zonotope sum_i [-g_i, g_i] as 2^d times the sum of the
// absolute d x d minors of the generator matrix (McMullen-Shephard).
inline Rational zonotope_volume(const std::vector<Point>& generators) {
    if (generators.empty()) throw BadParams("zonotope needs at least one generator");
    if (generators.size() > 32) throw TooManyGenerators("zonotope oracle capped at 32 generators");
    const int d = static_cast<int>(generators[0].size());
    const int n = static_cast<int>(generators.size());
    for (const auto& g : generators)
        if (static_cast<int>(g.size()) != d) throw DimensionMismatch("ragged generator list");
    if (n < d) return 0;

    Rational total = 0;
    std::vector<int> pick(d);
    for (int i = 0; i < d; ++i) pick[i] = i;
    while (true) {
        DenseMatrix<Rational> m(d, d);
        for (int r = 0; r < d; ++r)
            for (int c = 0; c < d; ++c) m(r, c) = generators[pick[r]][c];
        Rational minor = dense_det(m);
        total += minor < 0 ? -minor : minor;

        int i = d - 1;
        while (i >= 0 && pick[i] == n - d + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < d; ++j) pick[j] = pick[j - 1] + 1;
    }
    return rational_pow(2, d) * total;
}

} // namespace isocant
