#include <gtest/gtest.h>

#include <cmath>

#include "isocant/body_sampling.hpp"

using namespace isocant;

TEST(BodySampling, FastIsocantedMatchesExactMembership) {
    for (int d : {2, 3, 5})
        for (const auto& [ell, a] : std::vector<std::pair<Rational, Rational>>{
                 {2, 1}, {2, Rational(1, 2)}, {Rational(7, 2), Rational(5, 3)}, {3, 0}}) {
            IsocantedParams p(d, ell, a);
            Box box = Box::centered_cube(d, ell / 2);
            auto fast = mc_isocanted_volume(p, 3000, 99);
            auto exact = mc_volume(box, 3000, 99,
                                   [&](const Point& x) { return contains(p, x); });
            EXPECT_EQ(fast.estimate, exact.estimate) << "d=" << d;
            EXPECT_EQ(fast.std_error, exact.std_error);
        }
}

TEST(BodySampling, FastDualMatchesExactMembership) {
    for (int d : {2, 3, 4})
        for (const auto& [b, c] : std::vector<std::pair<Rational, Rational>>{
                 {1, 1}, {Rational(5, 3), Rational(3, 4)}, {Rational(1, 3), Rational(2, 3)}}) {
            DualParams p(d, b, c);
            ASSERT_TRUE(FastDualMembership::applicable(p));
            Box box = Box::centered_cube(d, std::max(b, c));
            auto fast = mc_dual_volume(p, 3000, 7);
            auto exact =
                mc_volume(box, 3000, 7, [&](const Point& x) { return dual_contains(p, x); });
            EXPECT_EQ(fast.estimate, exact.estimate) << "d=" << d;
        }
}

TEST(BodySampling, EstimatesLandNearTheExactVolumes) {
    IsocantedParams p(3, 2, 1);
    auto primal = mc_isocanted_volume(p, 200'000, 0x5EED1500CA47);
    EXPECT_NEAR(primal.estimate, 4.0, 6 * primal.std_error);

    DualParams q(3, 1, 1);
    auto dual = mc_dual_volume(q, 200'000, 0x5EED1500CA47);
    EXPECT_NEAR(dual.estimate, 10.0 / 3.0, 6 * dual.std_error);
}

TEST(BodySampling, OversizedParametersFallBackToExactPath) {
    Rational huge(BigInt("8589934597"), 3); // numerator past the 31-bit cap
    DualParams p(2, huge, huge);
    EXPECT_FALSE(FastDualMembership::applicable(p));
    EXPECT_THROW(FastDualMembership{p}, Overflow);
    // Scale invariance of the hit process: J(tb, tc) = t J(b, c), so the
    // estimate is exactly t^d times the unit-parameter one.
    auto scaled = mc_dual_volume(p, 2000, 5);
    auto unit = mc_dual_volume(DualParams(2, 1, 1), 2000, 5);
    double factor = to_double(huge) * to_double(huge);
    EXPECT_NEAR(scaled.estimate / factor, unit.estimate, 1e-9 * unit.estimate);
}

TEST(BodySampling, SpreadLimitEdgeCases) {
    // a = 0: no cant, every box sample is inside.
    FastIsocantedMembership cube(IsocantedParams(4, 5, 0));
    EXPECT_EQ(cube.spread_limit, std::uint64_t{1} << 53);
    auto est = mc_isocanted_volume(IsocantedParams(4, 5, 0), 500, 1);
    EXPECT_DOUBLE_EQ(est.estimate, 625.0);
    EXPECT_EQ(est.std_error, 0.0);
}
