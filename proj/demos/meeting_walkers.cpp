// d+1 people arrive at a random moment of the day and each waits a fixed
// fraction w of the day. The chance that they are all present at once is
// the volume of the isocanted cube I_d(1, 1-w), printed here exactly.

#include <iostream>

#include "isocant/isocanted.hpp"

using namespace isocant;

int main() {
    std::cout << "waiting one sixth of the day:\n";
    std::cout << "people  probability        decimal\n";
    for (int d = 2; d <= 10; ++d) {
        Rational p = meeting_probability(d, Rational(1, 6));
        std::cout << d + 1 << "\t" << to_string(p) << "\t" << to_double(p) << "\n";
    }

    std::cout << "\nthree people, sweep of the waiting time:\n";
    std::cout << "wait    probability\n";
    for (int k = 1; k <= 6; ++k) {
        Rational w(k, 6);
        std::cout << to_string(w) << "\t" << to_string(meeting_probability(2, w)) << "\n";
    }
    return 0;
}
