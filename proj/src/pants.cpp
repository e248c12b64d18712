#include "teich/pants.hpp"

#include <cmath>

#include "teich/isometry.hpp"

namespace teich {

PantsStructure::PantsStructure(double l1, double l2, double l3) : cuffLengths{l1, l2, l3} {
    for (double l : cuffLengths)
        if (!(l > 0.0) || !std::isfinite(l))
            throw InvalidArgumentError("PantsStructure: cuff lengths must be positive and finite");
}

double PantsStructure::cuff(int i) const {
    if (i < 1 || i > 3) throw IndexOutOfRangeError("PantsStructure::cuff: index must be 1..3");
    return cuffLengths[static_cast<std::size_t>(i - 1)];
}

double betweenCuffsLength(const PantsStructure& x, int i, int j) {
    if (i < 1 || i > 3 || j < 1 || j > 3)
        throw IndexOutOfRangeError("betweenCuffsLength: cuff indices must be 1..3");
    if (i == j) throw IndexOutOfRangeError("betweenCuffsLength: cuff indices must differ");
    int k = 6 - i - j;
    double ci = std::cosh(x.cuff(i) / 2.0), cj = std::cosh(x.cuff(j) / 2.0);
    double ck = std::cosh(x.cuff(k) / 2.0);
    double si = std::sinh(x.cuff(i) / 2.0), sj = std::sinh(x.cuff(j) / 2.0);
    return acoshStable((ck + ci * cj) / (si * sj));
}

double selfArcLength(const PantsStructure& x, int i) {
    if (i < 1 || i > 3) throw IndexOutOfRangeError("selfArcLength: cuff index must be 1..3");
    double c1 = std::cosh(x.cuff(1) / 2.0);
    double c2 = std::cosh(x.cuff(2) / 2.0);
    double c3 = std::cosh(x.cuff(3) / 2.0);
    double q = c1 * c1 + c2 * c2 + c3 * c3 + 2.0 * c1 * c2 * c3 - 1.0;
    return 2.0 * acoshStable(std::sqrt(q) / std::sinh(x.cuff(i) / 2.0));
}

double pantsArcLength(const PantsStructure& x, const PantsArcClass& arc) {
    if (arc.kind == PantsArcClass::Kind::Self) return selfArcLength(x, arc.i);
    return betweenCuffsLength(x, arc.i, arc.j);
}

std::vector<SpectrumEntry> pantsSpectrum(const PantsStructure& x) {
    std::vector<SpectrumEntry> out;
    out.reserve(9);
    for (int i = 1; i <= 3; ++i)
        out.push_back({PantsBoundary{i}, x.cuff(i)});
    out.push_back({PantsArc{PantsArcClass::between(1, 2)}, betweenCuffsLength(x, 1, 2)});
    out.push_back({PantsArc{PantsArcClass::between(1, 3)}, betweenCuffsLength(x, 1, 3)});
    out.push_back({PantsArc{PantsArcClass::between(2, 3)}, betweenCuffsLength(x, 2, 3)});
    for (int i = 1; i <= 3; ++i)
        out.push_back({PantsArc{PantsArcClass::selfArc(i)}, selfArcLength(x, i)});
    return out;
}

} // namespace teich
