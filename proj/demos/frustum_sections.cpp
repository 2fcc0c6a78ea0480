// Slices a square frustum and a triangular roof into cross-sections and
// compares the exact slice-integral volume with the closed forms.

#include <iostream>

#include "isocant/roofs.hpp"

using namespace isocant;

int main() {
    // Square frustum with base 4, top 2, height 3: the classic answer is 28.
    std::cout << "square frustum, base 4, top 2, height 3:\n";
    std::cout << "volume = " << to_string(frustum_volume_egyptian(2, 4, 3)) << "\n\n";

    // The same frustum family scaled into a C = 1, V = 3 roof.
    RoofSpec roof(1, 3, Surd(4), Surd(2), Surd(3));
    std::cout << "triangular roof, edges 4 -> 2, height 3:\n";
    std::cout << "dim " << roof.dim() << ", slant edge ell3 = " << to_string(ell3(roof))
              << "\n";
    std::cout << "volume = " << to_string(roof_volume(roof)) << " = "
              << to_double(roof_volume(roof)) << "\n";

    std::cout << "cross-sections from base to crest:\n";
    for (int k = 0; k <= 4; ++k) {
        Rational t(k, 4);
        Surd slice = section_volume(roof, t);
        std::cout << "t = " << to_string(t) << "\tarea = " << to_string(slice) << " = "
                  << to_double(slice) << "\n";
    }
    return 0;
}
