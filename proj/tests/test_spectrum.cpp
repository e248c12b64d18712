#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "support/oracles.hpp"
#include "teich/spectrum.hpp"

using namespace teich;

TEST_SUITE("spectrum") {

TEST_CASE("pants: boundary entries are the cuff lengths exactly") {
    TeichPoint x = PantsStructure(1, 2, 3);
    auto spec = lengthSpectrum(x, {10, true, true});
    REQUIRE(spec.size() == 9);
    CHECK(spec[0].length == 1.0);
    CHECK(spec[1].length == 2.0);
    CHECK(spec[2].length == 3.0);
}

TEST_CASE("torus: generator entry equals the cuff length") {
    TeichPoint x = HoledTorusStructure(1.0, 0.4, 1.2);
    auto spec = lengthSpectrum(x, {3, true, true});
    auto it = std::find_if(spec.begin(), spec.end(), [](const SpectrumEntry& e) {
        return label(e.curveClass) == "slope:1,0";
    });
    REQUIRE(it != spec.end());
    CHECK(std::fabs(it->length - 1.0) <= 1e-12);
    // boundary entry is the boundary length itself
    CHECK(label(spec[0].curveClass) == "boundary");
    CHECK(spec[0].length == 1.2);
}

TEST_CASE("budget flags control the family") {
    TeichPoint x = HoledTorusStructure(1.0, 0.0, 1.0);
    auto full = lengthSpectrum(x, {4, true, true});
    auto noArcs = lengthSpectrum(x, {4, false, true});
    auto noBoundary = lengthSpectrum(x, {4, true, false});
    CHECK(full.size() == 1 + 2 * static_cast<std::size_t>(countPrimitive(4)));
    CHECK(noArcs.size() == 1 + static_cast<std::size_t>(countPrimitive(4)));
    CHECK(noBoundary.size() == full.size() - 1);
}

TEST_CASE("kernel determinism: worker counts and the serial reference agree bit-for-bit") {
    for (TeichPoint x : {TeichPoint(HoledTorusStructure(0.9, -0.6, 1.4)),
                         TeichPoint(PantsStructure(0.7, 1.9, 2.2))}) {
        auto classes = enumerate(surfaceKindOf(x), {15, true, true});
        auto serial = ref::classLengths(x, classes);
        for (int threads : {1, 2, 4, 8}) {
            auto par = classLengths(x, classes, {threads});
            CHECK(par == serial);
        }
    }
}

TEST_CASE("kernel: permuted execution plan gives identical entries") {
    TeichPoint x = HoledTorusStructure(1.1, 0.2, 0.8);
    auto classes = enumerate(SurfaceKind::HoledTorus, {12, true, true});
    auto forward = classLengths(x, classes, {4});
    auto reversedClasses = classes;
    std::reverse(reversedClasses.begin(), reversedClasses.end());
    auto reversed = classLengths(x, reversedClasses, {4});
    std::reverse(reversed.begin(), reversed.end());
    CHECK(forward == reversed);
}

TEST_CASE("kernel propagates errors from worker iterations") {
    TeichPoint x = PantsStructure(1, 1, 1);
    std::vector<CurveClass> classes = {CurveClass{TorusBoundary{}}}; // wrong surface
    CHECK_THROWS_AS(classLengths(x, classes, {4}), SurfaceMismatchError);
}

} // TEST_SUITE
