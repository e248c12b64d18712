#pragma once

#include <array>

#include "teich/isometry.hpp"
#include "teich/pants.hpp"

namespace teich {

// Holonomy of the pair of pants realized as the index-2 orientation-preserving
// subgroup of the group generated by reflections in the three seams (the
// pairwise common perpendiculars of the cuffs). This realizes the doubling
// construction: doubling an orthogeodesic arc gives the closed geodesic whose
// holonomy is the product of the reflections in the two cuff lines it joins.
// Depends only on the isometry kernel, not on the hexagon formulas, so it
// serves as the independent doubled-holonomy oracle for pants-trig.
class PantsDouble {
public:
    explicit PantsDouble(const PantsStructure& x);

    const Isometry& cuffHolonomy(int i) const;      // 1-based; translation length = cuff i
    const Axis& cuffAxis(int i) const;

    // Translation length of the doubled arc (twice the orthogeodesic length).
    double doubledArcLength(const PantsArcClass& arc) const;

    // Half the doubled closed-geodesic length, i.e. the arc length itself.
    double arcLengthFromDouble(const PantsArcClass& arc) const;

private:
    std::array<Isometry, 3> cuff_;
    std::array<Axis, 3> axis_;
};

} // namespace teich
