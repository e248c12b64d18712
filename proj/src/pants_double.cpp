#include "teich/pants_double.hpp"

#include <cmath>

namespace teich {

PantsDouble::PantsDouble(const PantsStructure& x) {
    // Seams s3, s2 are concentric semicircles of radius 1 and e^{l1/2}, both
    // perpendicular to the cuff-1 line (the imaginary axis); their reflections
    // compose to the cuff-1 translation. Seam s1 = circle(m, r) is placed so
    // that dist(s3, s1) = l2/2 and dist(s1, s2) = l3/2, using
    // cosh dist(unit circle, circle(m, r)) = |m^2 - r^2 - 1| / (2r).
    double r2 = std::exp(x.cuff(1) / 2.0);
    double c2 = std::cosh(x.cuff(2) / 2.0);
    double c3 = std::cosh(x.cuff(3) / 2.0);
    double r = (r2 * r2 - 1.0) / (2.0 * (c2 + r2 * c3));
    double p = 1.0 + 2.0 * r * c2; // m^2 - r^2
    double m = std::sqrt(p + r * r);

    Reflection rs3 = Reflection::acrossGeodesic(BoundaryPoint::finite(-1.0), BoundaryPoint::finite(1.0));
    Reflection rs2 = Reflection::acrossGeodesic(BoundaryPoint::finite(-r2), BoundaryPoint::finite(r2));
    Reflection rs1 = Reflection::acrossGeodesic(BoundaryPoint::finite(m - r), BoundaryPoint::finite(m + r));

    cuff_[0] = compose(rs2, rs3);
    cuff_[1] = compose(rs3, rs1);
    cuff_[2] = compose(rs1, rs2);
    for (int i = 0; i < 3; ++i) axis_[static_cast<std::size_t>(i)] = cuff_[static_cast<std::size_t>(i)].axis();
}

const Isometry& PantsDouble::cuffHolonomy(int i) const {
    if (i < 1 || i > 3) throw IndexOutOfRangeError("PantsDouble::cuffHolonomy: index must be 1..3");
    return cuff_[static_cast<std::size_t>(i - 1)];
}

const Axis& PantsDouble::cuffAxis(int i) const {
    if (i < 1 || i > 3) throw IndexOutOfRangeError("PantsDouble::cuffAxis: index must be 1..3");
    return axis_[static_cast<std::size_t>(i - 1)];
}

double PantsDouble::doubledArcLength(const PantsArcClass& arc) const {
    if (arc.kind == PantsArcClass::Kind::Between) {
        Reflection ri = Reflection::across(cuffAxis(arc.i));
        Reflection rj = Reflection::across(cuffAxis(arc.j));
        return compose(ri, rj).translationLength();
    }
    // Self arc at cuff i: pair the cuff-i line with its translate under either
    // other cuff holonomy (both give the same adjacent lift).
    int j = arc.i == 1 ? 2 : 1;
    const Isometry& g = cuffHolonomy(j);
    Reflection ri = Reflection::across(cuffAxis(arc.i));
    Reflection rc{mul(mul(g.mat(), ri.m), invUnit(g.mat()))};
    return compose(ri, rc).translationLength();
}

double PantsDouble::arcLengthFromDouble(const PantsArcClass& arc) const {
    return doubledArcLength(arc) / 2.0;
}

} // namespace teich
