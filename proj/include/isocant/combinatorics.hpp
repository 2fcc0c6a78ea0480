#pragma once

#include "isocant/rational.hpp"

namespace isocant {

inline BigInt binomial(long n, long k) {
    if (n < 0) throw BadParams("binomial needs n >= 0");
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt result = 1;
    for (long i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i; // always exact: result is C(n-k+i, i) after this step
    }
    return result;
}

inline BigInt factorial(long n) {
    if (n < 0) throw BadParams("factorial needs n >= 0");
    BigInt result = 1;
    for (long i = 2; i <= n; ++i) result *= i;
    return result;
}

// integral_0^1 (1-t)^j t^k dt = j! k! / (j+k+1)!
inline Rational beta_int(long j, long k) {
    if (j < 0 || k < 0) throw BadParams("beta_int needs j, k >= 0");
    return Rational(factorial(j) * factorial(k), factorial(j + k + 1));
}

} // namespace isocant
