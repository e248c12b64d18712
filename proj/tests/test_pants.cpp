#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "support/oracles.hpp"
#include "teich/pants.hpp"
#include "teich/pants_double.hpp"

using namespace teich;

TEST_SUITE("pants") {

TEST_CASE("structure validation") {
    CHECK_THROWS_AS(PantsStructure(0.0, 1.0, 1.0), InvalidArgumentError);
    CHECK_THROWS_AS(PantsStructure(1.0, -2.0, 1.0), InvalidArgumentError);
    CHECK_THROWS_AS(PantsStructure(1.0, 1.0, std::nan("")), InvalidArgumentError);
    CHECK_THROWS_AS(PantsStructure(1, 1, 1).cuff(0), IndexOutOfRangeError);
    CHECK_THROWS_AS(PantsStructure(1, 1, 1).cuff(4), IndexOutOfRangeError);
}

// Golden values frozen after confirmation by the reflection-group oracle.
TEST_CASE("betweenCuffsLength: frozen oracle-confirmed values") {
    PantsStructure x111(1, 1, 1), x222(2, 2, 2);
    CHECK(betweenCuffsLength(x111, 1, 2) == doctest::Approx(2.8686951416198219).epsilon(1e-14));
    CHECK(betweenCuffsLength(x222, 1, 2) == doctest::Approx(1.7049128323580138).epsilon(1e-14));
    PantsDouble d111(x111), d222(x222);
    CHECK(std::fabs(betweenCuffsLength(x111, 1, 2) -
                    d111.arcLengthFromDouble(PantsArcClass::between(1, 2))) <= 1e-9);
    CHECK(std::fabs(betweenCuffsLength(x222, 1, 2) -
                    d222.arcLengthFromDouble(PantsArcClass::between(1, 2))) <= 1e-9);
}

TEST_CASE("betweenCuffsLength: symmetry in (i, j) and under symmetric cuffs") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 50; ++it) {
        PantsStructure x = oracle::randomPants(rng);
        CHECK(betweenCuffsLength(x, 1, 2) == betweenCuffsLength(x, 2, 1));
        CHECK(betweenCuffsLength(x, 1, 3) == betweenCuffsLength(x, 3, 1));
        CHECK(betweenCuffsLength(x, 2, 3) == betweenCuffsLength(x, 3, 2));
    }
    PantsStructure sym(1.3, 1.3, 1.3);
    CHECK(betweenCuffsLength(sym, 1, 2) == doctest::Approx(betweenCuffsLength(sym, 1, 3)).epsilon(1e-15));
    CHECK(betweenCuffsLength(sym, 1, 2) == doctest::Approx(betweenCuffsLength(sym, 2, 3)).epsilon(1e-15));
    CHECK_THROWS_AS(betweenCuffsLength(sym, 1, 1), IndexOutOfRangeError);
    CHECK_THROWS_AS(betweenCuffsLength(sym, 0, 2), IndexOutOfRangeError);
}

TEST_CASE("selfArcLength: frozen value, symmetry, index validation") {
    PantsStructure x111(1, 1, 1);
    // golden value recorded after oracle confirmation
    CHECK(selfArcLength(x111, 1) == doctest::Approx(4.4029552948632569).epsilon(1e-14));
    CHECK(selfArcLength(x111, 2) == doctest::Approx(selfArcLength(x111, 1)).epsilon(1e-15));
    CHECK(selfArcLength(x111, 3) == doctest::Approx(selfArcLength(x111, 1)).epsilon(1e-15));
    CHECK_THROWS_AS(selfArcLength(x111, 0), IndexOutOfRangeError);
}

TEST_CASE("selfArcLength: observed monotonicity on the sampled grid") {
    // increasing l2 = l3 with l1 fixed strictly increases SelfArc(1)
    // (direction confirmed by the doubled-holonomy oracle)
    double prev = 0.0;
    for (double t = 0.5; t <= 4.01; t += 0.25) {
        PantsStructure x(1.0, t, t);
        double v = selfArcLength(x, 1);
        PantsDouble dbl(x);
        CHECK(std::fabs(v - dbl.arcLengthFromDouble(PantsArcClass::selfArc(1))) <= 1e-9);
        CHECK(v > prev);
        prev = v;
    }
}

TEST_CASE("doubling: every arc agrees with half the doubled closed geodesic") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 50; ++it) {
        PantsStructure x = oracle::randomPants(rng);
        PantsDouble dbl(x);
        for (const auto& e : pantsSpectrum(x)) {
            if (const auto* arc = std::get_if<PantsArc>(&e.curveClass)) {
                double doubled = dbl.doubledArcLength(arc->arc);
                CHECK(std::fabs(2.0 * e.length - doubled) / doubled <= 1e-9);
            }
        }
    }
}

TEST_CASE("doubling realization: cuff traces and both self-arc conjugators agree") {
    std::mt19937_64 rng(47);
    for (int it = 0; it < 20; ++it) {
        PantsStructure x = oracle::randomPants(rng);
        PantsDouble dbl(x);
        for (int i = 1; i <= 3; ++i)
            CHECK(std::fabs(dbl.cuffHolonomy(i).translationLength() - x.cuff(i)) <= 1e-10);
        // the self arc at cuff 1 from either other cuff's translate
        Reflection r1 = Reflection::across(dbl.cuffAxis(1));
        for (int j : {2, 3}) {
            Mat2 g = dbl.cuffHolonomy(j).mat();
            Reflection rc{mul(mul(g, r1.m), invUnit(g))};
            double len = compose(r1, rc).translationLength();
            CHECK(std::fabs(len - dbl.doubledArcLength(PantsArcClass::selfArc(1))) <= 1e-9);
        }
    }
}

TEST_CASE("pantsSpectrum: 9 classes, exact boundary entries, positivity") {
    PantsStructure x(1, 2, 3);
    auto spec = pantsSpectrum(x);
    REQUIRE(spec.size() == 9);
    CHECK(spec[0].length == 1.0);
    CHECK(spec[1].length == 2.0);
    CHECK(spec[2].length == 3.0);
    std::set<std::string> labels;
    for (const auto& e : spec) labels.insert(label(e.curveClass));
    CHECK(labels.size() == 9);

    PantsStructure sym(1, 1, 1);
    auto specSym = pantsSpectrum(sym);
    CHECK(specSym[3].length == doctest::Approx(specSym[4].length).epsilon(1e-15));
    CHECK(specSym[3].length == doctest::Approx(specSym[5].length).epsilon(1e-15));
    CHECK(specSym[6].length == doctest::Approx(specSym[7].length).epsilon(1e-15));

    std::mt19937_64 rng(53);
    for (int it = 0; it < 50; ++it)
        for (const auto& e : pantsSpectrum(oracle::randomPants(rng)))
            CHECK(e.length > 0.0);
}

TEST_CASE("scaling probe: boundary doubles exactly, arcs grow sublinearly") {
    for (double a = 0.5; a <= 4.01; a += 0.5) {
        PantsStructure x(a, a, a), y(2 * a, 2 * a, 2 * a);
        CHECK(y.cuff(1) / x.cuff(1) == 2.0);
        CHECK(betweenCuffsLength(y, 1, 2) / betweenCuffsLength(x, 1, 2) < 2.0);
        CHECK(selfArcLength(y, 1) / selfArcLength(x, 1) < 2.0);
    }
}

} // TEST_SUITE
