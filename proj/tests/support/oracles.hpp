#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <random>

#include "teich/pants.hpp"
#include "teich/pants_double.hpp"
#include "teich/torus.hpp"

// Independent oracles used to freeze expected values. Everything here stays
// off the library's computation paths: quadrature instead of closed forms,
// reflection-group traces instead of hexagon formulas, brute-force scans
// instead of the metric kernels.
namespace oracle {

// Composite Simpson rule.
double simpson(const std::function<double(double)>& f, double a, double b, int intervals);

// Hyperbolic length of the common perpendicular between the geodesics with
// endpoints (-1, 1) and (-r, r), integrated along the vertical segment.
double concentricDistanceByQuadrature(double r, int intervals = 20000);

// Euclidean annulus {r1 < |z| < r2}: modulus from the radii, extremal length
// of the core from the L^2/A ratio of the |dz|/|z| metric (both integrals by
// quadrature), hyperbolic core length from the deck multiplier of the
// uniformizing cover (2 pi^2 / log(r2/r1)).
struct AnnulusOracle {
    double modulus;
    double coreExtremalLength;
    double coreHyperbolicLength;
};
AnnulusOracle annulusByQuadrature(double r1, double r2, int intervals = 2000000);

// The 9 lengths of C u B for a pants, from the reflection-group double
// (no hexagon formulas involved). Order matches teich::enumerate.
std::array<double, 9> nineLengthsFromDouble(const teich::PantsStructure& x);

// Brute-force log sup l_Y / l_X over the 9 classes.
double pantsLogSupRatio(const teich::PantsStructure& x, const teich::PantsStructure& y);

std::int64_t primitiveCountByGcdScan(int n);

// Portable uniform sample in [lo, hi) from a seeded engine.
double uniform(std::mt19937_64& rng, double lo, double hi);

// Random unit-determinant hyperbolic element with a moderate conjugator.
teich::Isometry randomHyperbolic(std::mt19937_64& rng);

teich::PantsStructure randomPants(std::mt19937_64& rng, double lo = 0.4, double hi = 3.0);
teich::HoledTorusStructure randomTorus(std::mt19937_64& rng);

} // namespace oracle
