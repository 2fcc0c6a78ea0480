#include <gtest/gtest.h>

#include <cmath>

#include "isocant/isocanted.hpp"
#include "isocant/monte_carlo.hpp"
#include "isocant/vertex_enum.hpp"
#include "isocant/zonotope.hpp"

using namespace isocant;

TEST(Rng, MatchesReferenceStream) {
    SplitMix64 rng{0};
    EXPECT_EQ(rng.at(0), 0xe220a8397b1dcdafULL);
    EXPECT_EQ(rng.at(1), 0x6e789e6aa1b965f4ULL);
    EXPECT_EQ(rng.at(2), 0x06c45d188009454fULL);

    SplitMix64 seeded{0x5EED1500CA47ULL};
    EXPECT_EQ(seeded.at(0), 0x4efa0f00c3ba424eULL);
    EXPECT_EQ(seeded.at(1), 0x85754f6bea3cf4a0ULL);
    EXPECT_EQ(seeded.at(2), 0x246a937267b18b20ULL);
}

TEST(Rng, CounterBasedValuesIgnoreCallOrder) {
    SplitMix64 rng{42};
    const auto late = rng.at(1000);
    const auto early = rng.at(3);
    SplitMix64 again{42};
    EXPECT_EQ(again.at(3), early);
    EXPECT_EQ(again.at(1000), late);
}

TEST(Rng, DerivedDrawsStayInRange) {
    SplitMix64 rng{7};
    for (std::uint64_t i = 0; i < 2000; ++i) {
        double u = rng.uniform01(i);
        EXPECT_GE(u, 0.0);
        EXPECT_LT(u, 1.0);
        EXPECT_LT(rng.below(i, 10), 10u);
        EXPECT_LT(rng.mantissa53(i), std::uint64_t{1} << 53);
    }
}

TEST(Zonotope, BoxAndParallelogram) {
    std::vector<Point> box = {{Rational(1), 0, 0}, {0, Rational(1), 0}, {0, 0, Rational(1)}};
    EXPECT_EQ(zonotope_volume(box), Rational(8));

    std::vector<Point> par = {{Rational(1), 0}, {Rational(1), Rational(1)}};
    EXPECT_EQ(zonotope_volume(par), Rational(4));

    par.push_back({Rational(0), Rational(0)}); // zero generator adds nothing
    EXPECT_EQ(zonotope_volume(par), Rational(4));
}

TEST(Zonotope, MatchesIsocantedClosedForm) {
    IsocantedParams p(3, 2, 1);
    EXPECT_EQ(zonotope_volume(generators(p)), volume(p));
    EXPECT_EQ(volume(p), Rational(4));
}

TEST(Zonotope, InputValidation) {
    EXPECT_EQ(zonotope_volume({{Rational(1), 0}}), Rational(0)); // fewer than d generators
    EXPECT_THROW(zonotope_volume({}), BadParams);
    EXPECT_THROW(zonotope_volume({{Rational(1), 0}, {Rational(1)}}), DimensionMismatch);
    std::vector<Point> many(33, Point{Rational(1)});
    EXPECT_THROW(zonotope_volume(many), TooManyGenerators);
}

namespace {

HalfspaceSystem unit_square() {
    HalfspaceSystem sys;
    sys.dim = 2;
    sys.halfspaces = {
        {{Rational(1), Rational(0)}, Rational(1)},
        {{Rational(-1), Rational(0)}, Rational(0)},
        {{Rational(0), Rational(1)}, Rational(1)},
        {{Rational(0), Rational(-1)}, Rational(0)},
    };
    return sys;
}

} // namespace

TEST(VertexEnum, UnitSquare) {
    auto verts = lp_vertices(unit_square());
    std::vector<Point> expected = {
        {Rational(0), Rational(0)},
        {Rational(0), Rational(1)},
        {Rational(1), Rational(0)},
        {Rational(1), Rational(1)},
    };
    EXPECT_EQ(verts, expected);
}

TEST(VertexEnum, RedundantHalfspaceChangesNothing) {
    auto sys = unit_square();
    sys.halfspaces.push_back({{Rational(1), Rational(1)}, Rational(5)});
    EXPECT_EQ(lp_vertices(sys), lp_vertices(unit_square()));
}

TEST(VertexEnum, DetectsUnboundedSystems) {
    auto sys = unit_square();
    sys.halfspaces.erase(sys.halfspaces.begin()); // drop x <= 1
    EXPECT_THROW(lp_vertices(sys), Unbounded);

    HalfspaceSystem slab;
    slab.dim = 2;
    slab.halfspaces = {{{Rational(1), Rational(1)}, Rational(1)},
                       {{Rational(-1), Rational(-1)}, Rational(0)}};
    EXPECT_THROW(lp_vertices(slab), Unbounded); // normals do not span

    HalfspaceSystem half_line;
    half_line.dim = 1;
    half_line.halfspaces = {{{Rational(-1)}, Rational(0)}};
    EXPECT_THROW(lp_vertices(half_line), Unbounded);
}

TEST(VertexEnum, EmptyBoundedSystemHasNoVertices) {
    HalfspaceSystem sys;
    sys.dim = 1;
    sys.halfspaces = {{{Rational(1)}, Rational(-1)}, {{Rational(-1)}, Rational(0)}};
    EXPECT_TRUE(lp_vertices(sys).empty());
}

TEST(VertexEnum, DimensionCap) {
    HalfspaceSystem sys;
    sys.dim = 5;
    EXPECT_THROW(lp_vertices(sys), DimensionTooLarge);
}

TEST(MonteCarlo, FullBoxPredicateIsExact) {
    Box box = Box::centered_cube(3, Rational(3, 2));
    auto est = mc_volume(box, 500, 99, [](const Point&) { return true; });
    EXPECT_DOUBLE_EQ(est.estimate, 27.0);
    EXPECT_DOUBLE_EQ(est.std_error, 0.0);
    EXPECT_EQ(est.samples, 500u);
    EXPECT_EQ(est.seed, 99u);
}

TEST(MonteCarlo, DeterministicForAGivenSeed) {
    Box box = Box::centered_cube(2, 1);
    auto inside = [](const Point& x) { return x[0] * x[0] + x[1] * x[1] <= 1; };
    auto first = mc_volume(box, 4000, 7, inside);
    auto second = mc_volume(box, 4000, 7, inside);
    EXPECT_EQ(first.estimate, second.estimate);
    EXPECT_NEAR(first.estimate, 3.14159, 6 * first.std_error + 1e-9);
}

TEST(MonteCarlo, SeedsAgreeWithinCombinedError) {
    IsocantedParams p(2, 2, 1);
    Box box = Box::centered_cube(2, 1);
    auto inside = [&](const Point& x) { return contains(p, x); };
    auto one = mc_volume(box, 20000, 1, inside);
    auto two = mc_volume(box, 20000, 2, inside);
    double combined = std::hypot(one.std_error, two.std_error);
    EXPECT_LT(std::abs(one.estimate - two.estimate), 6 * combined);
    EXPECT_NEAR(one.estimate, 3.0, 6 * one.std_error);
}

TEST(MonteCarlo, InputValidation) {
    Box bad;
    bad.bounds = {{Rational(1), Rational(-1)}};
    EXPECT_THROW(mc_volume(bad, 10, 0, [](const Point&) { return true; }), BadBox);
    EXPECT_THROW(mc_volume(Box{}, 10, 0, [](const Point&) { return true; }), BadBox);
    Box box = Box::centered_cube(1, 1);
    EXPECT_THROW(mc_volume(box, 0, 0, [](const Point&) { return true; }), BadParams);
}
