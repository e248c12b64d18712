#pragma once

#include "teich/curves.hpp"
#include "teich/isometry.hpp"

namespace teich {

// Fenchel-Nielsen coordinates of a hyperbolic structure on the one-holed
// torus (type (1,0,1)): length l and twist tau of the interior curve of
// slope (1,0), plus the boundary geodesic length L.
struct HoledTorusStructure {
    double cuffLength = 1.0;     // l > 0
    double twist = 0.0;          // tau, signed length units
    double boundaryLength = 1.0; // L > 0

    HoledTorusStructure() = default;
    HoledTorusStructure(double l, double tau, double L);
};

// Discrete faithful representation of pi_1 (free of rank 2) built from the
// coordinates. Normalization: A is diagonal with axis the imaginary axis and
// tr A = 2 cosh(l/2); at tau = 0 the second generator B_0 has its axis
// perpendicular to A's through i, with tr B_0 fixed by the boundary-trace
// equation tr[A,B] = -2 cosh(L/2); the twist acts by B = D(tau) B_0 where
// D is the diagonal translation by tau along A's axis (D(l) = A, so a full
// twist is the Dehn twist along the cuff). Immutable after construction.
class HolonomyRep {
public:
    static HolonomyRep build(const HoledTorusStructure& x); // throws DegenerateStructureError

    const HoledTorusStructure& structure() const { return x_; }
    const Isometry& generatorA() const { return a_; }
    const Isometry& generatorB() const { return b_; }
    const Isometry& boundaryWord() const { return boundary_; } // A B A^-1 B^-1
    const Axis& boundaryAxis() const { return boundaryAxis_; }
    const Reflection& boundaryReflection() const { return mirror_; }

    // Trace of the deterministic word of a primitive slope, by Stern-Brocot
    // descent with the Markov recursion tr W(a+b) = tr W(a) tr W(b) - tr W(a-b);
    // each step reuses the two ancestor traces, so cost is O(depth).
    double slopeTrace(const Slope& s) const;

    // The word itself (same descent carrying matrices; W(1,0) = A, W(0,1) = B,
    // Farey mediant -> left * right).
    Isometry slopeWord(const Slope& s) const;

    // Geodesic length of the slope-(p,q) simple closed curve.
    double closedLength(const Slope& s) const;

    // Orthogeodesic length of the arc class disjoint from slope s: the common
    // perpendicular between the boundary axis and its translate under the
    // cut-normalized slope word (see cutNormalizedWord), with the cross-ratio
    // evaluated in the boundary axis frame for stability. Agrees with the
    // self-arc of the cut pants (boundaryLength, l_s, l_s).
    double arcLength(const Slope& s) const;

    // Doubling check: the doubled arc closes up to the orientation-preserving
    // word (R W R) W^-1 in the doubled group (R the boundary reflection);
    // returns |2 arcLength - len| / len against that word's translation length.
    double doubledArcResidual(const Slope& s) const;

    // Same with a caller-provided reflection (negative controls in tests).
    double doubledArcResidual(const Slope& s, const Reflection& mirror) const;

    // Slope-class representative conjugated so that it forms a cut-pants pair
    // with the stored boundary word [A,B]; the pairing (not just the
    // conjugacy class) determines which orthogeodesic the axes single out.
    Isometry cutNormalizedWord(const Slope& s) const;

private:
    HolonomyRep(const HoledTorusStructure& x, Isometry a, Isometry b);

    HoledTorusStructure x_;
    Isometry a_, b_, boundary_;
    Axis boundaryAxis_;
    Mat2 frame_, frameInv_; // eigenframe of the boundary word
    Reflection mirror_;
};

inline HolonomyRep buildHolonomy(const HoledTorusStructure& x) { return HolonomyRep::build(x); }

// Relative residual of the doubling identity 2 * arcLength = doubled length.
double doubledArcCheck(const HoledTorusStructure& x, const Slope& arcClass);

} // namespace teich
