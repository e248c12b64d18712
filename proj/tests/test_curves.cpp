#include <doctest.h>

#include <set>

#include "support/oracles.hpp"
#include "teich/curves.hpp"

using namespace teich;

TEST_SUITE("curves") {

TEST_CASE("slope normalization and validation") {
    CHECK(Slope::make(1, -1) == Slope::make(-1, 1));
    CHECK(Slope::make(-1, 0).p == 1);
    CHECK(Slope::make(3, -2) == Slope{-3, 2});
    CHECK_THROWS_AS(Slope::make(0, 0), InvalidArgumentError);
    CHECK_THROWS_AS(Slope::make(2, 4), InvalidArgumentError);
}

TEST_CASE("torus enumeration, N = 2, curves only: the 8 primitive classes") {
    auto classes = enumerate(SurfaceKind::HoledTorus, {2, false, false});
    REQUIRE(classes.size() == 8);
    std::set<std::string> got;
    for (const auto& c : classes) got.insert(label(c));
    std::set<std::string> want = {"slope:1,0",  "slope:0,1",  "slope:1,1",  "slope:-1,1",
                                  "slope:2,1",  "slope:1,2",  "slope:-2,1", "slope:-1,2"};
    CHECK(got == want);
}

TEST_CASE("pants enumeration: always the full class list, independent of N") {
    for (int n : {1, 5, 50}) {
        auto all = enumerate(SurfaceKind::Pants, {n, true, true});
        CHECK(all.size() == 9);
        CHECK(enumerate(SurfaceKind::Pants, {n, false, true}).size() == 3);
        CHECK(enumerate(SurfaceKind::Pants, {n, true, false}).size() == 6);
    }
}

TEST_CASE("budget growth: each list is a prefix of the next") {
    for (int n = 1; n <= 10; ++n) {
        auto small = enumerate(SurfaceKind::HoledTorus, {n, true, true});
        auto big = enumerate(SurfaceKind::HoledTorus, {n + 1, true, true});
        REQUIRE(small.size() <= big.size());
        for (std::size_t i = 0; i < small.size(); ++i) CHECK(small[i] == big[i]);
    }
}

TEST_CASE("enumeration is deterministic and duplicate-free") {
    EnumerationBudget b{12, true, true};
    auto first = enumerate(SurfaceKind::HoledTorus, b);
    auto second = enumerate(SurfaceKind::HoledTorus, b);
    CHECK(first == second);
    std::set<std::string> labels;
    for (const auto& c : first) labels.insert(label(c));
    CHECK(labels.size() == first.size());
}

TEST_CASE("countPrimitive: small values, gcd-scan oracle, monotonicity") {
    CHECK(countPrimitive(1) == 4);
    CHECK(countPrimitive(2) == 8);
    for (int n = 1; n <= 30; ++n) {
        CHECK(countPrimitive(n) == oracle::primitiveCountByGcdScan(n));
        if (n > 1) CHECK(countPrimitive(n) > countPrimitive(n - 1));
    }
    CHECK_THROWS_AS(countPrimitive(0), InvalidArgumentError);
    // enumeration count matches the primitive count
    auto curvesOnly = enumerate(SurfaceKind::HoledTorus, {17, false, false});
    CHECK(static_cast<std::int64_t>(curvesOnly.size()) == countPrimitive(17));
}

TEST_CASE("labels round-trip through the parser") {
    for (const auto& c : enumerate(SurfaceKind::HoledTorus, {6, true, true}))
        CHECK(parseClassLabel(SurfaceKind::HoledTorus, label(c)) == c);
    for (const auto& c : enumerate(SurfaceKind::Pants, {1, true, true}))
        CHECK(parseClassLabel(SurfaceKind::Pants, label(c)) == c);
}

TEST_CASE("label parsing rejects malformed input") {
    CHECK_THROWS_AS(parseClassLabel(SurfaceKind::Pants, "bogus"), InvalidArgumentError);
    CHECK_THROWS_AS(parseClassLabel(SurfaceKind::Pants, "boundary:7"), IndexOutOfRangeError);
    CHECK_THROWS_AS(parseClassLabel(SurfaceKind::Pants, "between:1"), InvalidArgumentError);
    CHECK_THROWS_AS(parseClassLabel(SurfaceKind::HoledTorus, "slope:2,4"), InvalidArgumentError);
    CHECK_THROWS_AS(parseClassLabel(SurfaceKind::HoledTorus, "slope:1,x"), InvalidArgumentError);
    CHECK_THROWS_AS(parseClassLabel(SurfaceKind::HoledTorus, "between:1,2"), InvalidArgumentError);
}

TEST_CASE("class set predicates: C and B membership") {
    CHECK(isClosedClass(CurveClass{TorusCurve{Slope::make(1, 0)}}));
    CHECK(isClosedClass(CurveClass{TorusBoundary{}}));
    CHECK(isClosedClass(CurveClass{PantsBoundary{2}}));
    CHECK_FALSE(isClosedClass(CurveClass{TorusArc{Slope::make(1, 0)}}));
    CHECK(isArcOrBoundaryClass(CurveClass{TorusArc{Slope::make(1, 0)}}));
    CHECK(isArcOrBoundaryClass(CurveClass{TorusBoundary{}}));
    CHECK(isArcOrBoundaryClass(CurveClass{PantsBoundary{1}})); // boundary lies in both C and B
    CHECK_FALSE(isArcOrBoundaryClass(CurveClass{TorusCurve{Slope::make(1, 2)}}));
}

} // TEST_SUITE
