#pragma once

#include <array>
#include <vector>

#include "teich/curves.hpp"

namespace teich {

// Hyperbolic structure on the pair of pants (type (0,0,3)): a point of its
// Teichmueller space, determined by the three geodesic boundary lengths.
struct PantsStructure {
    std::array<double, 3> cuffLengths{1.0, 1.0, 1.0};

    PantsStructure() = default;
    explicit PantsStructure(double l1, double l2, double l3);
    explicit PantsStructure(const std::array<double, 3>& cuffs)
        : PantsStructure(cuffs[0], cuffs[1], cuffs[2]) {}

    double cuff(int i) const; // 1-based; throws IndexOutOfRangeError
};

// Orthogeodesic between distinct cuffs i and j, from the right-angled hexagon
// identity cosh d = (cosh(l_k/2) + cosh(l_i/2) cosh(l_j/2)) / (sinh(l_i/2) sinh(l_j/2)).
double betweenCuffsLength(const PantsStructure& x, int i, int j);

// Orthogeodesic from cuff i back to itself, separating the other two cuffs.
// The arc is symmetric under the seam-fixing reflection, so its half is the
// common perpendicular between two opposite sides of the right-angled hexagon
// (the cuff-i side and the seam between the other two cuffs). Splitting the
// hexagon along that perpendicular h into two right-angled pentagons gives
//   cosh h = sinh(seam(i,j)) sinh(l_j/2),
// which simplifies to cosh h = sqrt(Q) / sinh(l_i/2) with
//   Q = c1^2 + c2^2 + c3^2 + 2 c1 c2 c3 - 1,  c_k = cosh(l_k/2),
// and the arc length is 2h. Cross-validated against the doubled holonomy.
double selfArcLength(const PantsStructure& x, int i);

double pantsArcLength(const PantsStructure& x, const PantsArcClass& arc);

// All 9 classes of C u B for the pants: 3 boundary curves, 3 between-cuff
// arcs, 3 self arcs, in canonical enumeration order.
std::vector<SpectrumEntry> pantsSpectrum(const PantsStructure& x);

} // namespace teich
