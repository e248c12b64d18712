#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "teich/thick.hpp"

namespace oracle {

double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
    if (intervals % 2 != 0) ++intervals;
    double h = (b - a) / intervals;
    double acc = f(a) + f(b);
    for (int i = 1; i < intervals; ++i) acc += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return acc * h / 3.0;
}

double concentricDistanceByQuadrature(double r, int intervals) {
    // common perpendicular = the segment of the imaginary axis from i to ri;
    // ds = |dz| / Im z
    return simpson([](double y) { return 1.0 / y; }, 1.0, r, intervals);
}

AnnulusOracle annulusByQuadrature(double r1, double r2, int intervals) {
    AnnulusOracle out{};
    out.modulus = std::log(r2 / r1) / (2.0 * std::numbers::pi);
    // conformal metric rho = 1/|z|: every essential loop has length >= 2 pi,
    // area = 2 pi Int dr/r; this metric is extremal for the core class, and
    // the geometric definition caps E at 1/modulus, so L^2/A is the value.
    double area =
        2.0 * std::numbers::pi * simpson([](double r) { return 1.0 / r; }, r1, r2, intervals);
    double coreLen = simpson([](double) { return 1.0; }, 0.0, 2.0 * std::numbers::pi, intervals);
    out.coreExtremalLength = coreLen * coreLen / area;
    // uniformizing cover H -> annulus has deck multiplier log lambda = 2 pi^2 / log(r2/r1)
    out.coreHyperbolicLength = 2.0 * std::numbers::pi * std::numbers::pi / std::log(r2 / r1);
    return out;
}

std::array<double, 9> nineLengthsFromDouble(const teich::PantsStructure& x) {
    teich::PantsDouble dbl(x);
    std::array<double, 9> len{};
    for (int i = 1; i <= 3; ++i)
        len[static_cast<std::size_t>(i - 1)] = dbl.cuffHolonomy(i).translationLength();
    len[3] = dbl.arcLengthFromDouble(teich::PantsArcClass::between(1, 2));
    len[4] = dbl.arcLengthFromDouble(teich::PantsArcClass::between(1, 3));
    len[5] = dbl.arcLengthFromDouble(teich::PantsArcClass::between(2, 3));
    for (int i = 1; i <= 3; ++i)
        len[static_cast<std::size_t>(5 + i)] = dbl.arcLengthFromDouble(teich::PantsArcClass::selfArc(i));
    return len;
}

double pantsLogSupRatio(const teich::PantsStructure& x, const teich::PantsStructure& y) {
    std::array<double, 9> lx = nineLengthsFromDouble(x);
    std::array<double, 9> ly = nineLengthsFromDouble(y);
    double best = -1e300;
    for (std::size_t i = 0; i < 9; ++i) best = std::max(best, std::log(ly[i]) - std::log(lx[i]));
    return best;
}

std::int64_t primitiveCountByGcdScan(int n) {
    std::int64_t count = 0;
    for (int p = -n; p <= n; ++p)
        for (int q = -n; q <= n; ++q) {
            if (p == 0 && q == 0) continue;
            if (q < 0 || (q == 0 && p < 0)) continue; // normalization: q > 0 or (q = 0, p = 1)
            if (std::gcd(std::abs(p), std::abs(q)) != 1) continue;
            ++count;
        }
    return count;
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return teich::uniformFromBits(rng(), lo, hi);
}

teich::Isometry randomHyperbolic(std::mt19937_64& rng) {
    teich::Isometry t = teich::Isometry::imaginaryAxisTranslation(uniform(rng, 0.3, 2.2));
    teich::Isometry k(1.0, uniform(rng, -0.75, 0.75), 0.0, 1.0);
    teich::Isometry m(1.0, 0.0, uniform(rng, -0.75, 0.75), 1.0);
    return k * m * t * m.inverse() * k.inverse();
}

teich::PantsStructure randomPants(std::mt19937_64& rng, double lo, double hi) {
    return teich::PantsStructure(uniform(rng, lo, hi), uniform(rng, lo, hi), uniform(rng, lo, hi));
}

teich::HoledTorusStructure randomTorus(std::mt19937_64& rng) {
    return {uniform(rng, 0.4, 2.2), uniform(rng, -1.5, 1.5), uniform(rng, 0.4, 2.2)};
}

} // namespace oracle
