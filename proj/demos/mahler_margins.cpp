// The volume product of a canted cube and its polar dual never drops
// below 4^d/d!, the value attained by the plain cube. This prints the
// certificate polynomial for a few dimensions and watches the margin
// collapse as the cant vanishes.

#include <iostream>

#include "isocant/mahler.hpp"

using namespace isocant;

int main() {
    for (int d : {2, 3, 4, 8}) {
        MahlerCertificate cert = positivity_certificate(d);
        std::cout << "d = " << d << ": p(x) coefficients";
        for (const auto& c : cert.coefficients) std::cout << " " << to_string(c);
        std::cout << "\n  sign changes " << cert.sign_change_count << ", verdict "
                  << (cert.verdict ? "positive on (0,1)" : "failed") << "\n";
    }

    std::cout << "\nd = 3, ell = 2, margin above 4^3/3! as a -> 0:\n";
    Rational bound(BigInt(64), factorial(3));
    for (int k = 0; k <= 10; ++k) {
        Rational a(1, BigInt(1) << k);
        Rational margin = volume_product(2, a, 3) - bound;
        std::cout << "a = " << to_string(a) << "\tmargin = " << to_string(margin)
                  << "\t= " << to_double(margin) << "\n";
    }
    return 0;
}
