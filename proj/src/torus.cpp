#include "teich/torus.hpp"

#include <cmath>
#include <cstdlib>

namespace teich {

HoledTorusStructure::HoledTorusStructure(double l, double tau, double L)
    : cuffLength(l), twist(tau), boundaryLength(L) {
    if (!(l > 0.0) || !std::isfinite(l) || !(L > 0.0) || !std::isfinite(L) || !std::isfinite(tau))
        throw DegenerateStructureError(
            "HoledTorusStructure: need cuffLength > 0, boundaryLength > 0, finite twist");
}

HolonomyRep::HolonomyRep(const HoledTorusStructure& x, Isometry a, Isometry b)
    : x_(x), a_(a), b_(b) {
    boundary_ = a_ * b_ * a_.inverse() * b_.inverse();
    if (!boundary_.isHyperbolic())
        throw DegenerateStructureError("HolonomyRep: boundary word is not hyperbolic");
    double want = 2.0 * std::cosh(x.boundaryLength / 2.0);
    if (std::fabs(std::fabs(boundary_.trace()) - want) > 1e-9 * want)
        throw DegenerateStructureError("HolonomyRep: boundary trace does not match 2cosh(L/2)");
    boundaryAxis_ = boundary_.axis();
    frame_ = boundary_.axisFrame();
    frameInv_ = invUnit(frame_);
    mirror_ = Reflection::across(boundaryAxis_);
}

HolonomyRep HolonomyRep::build(const HoledTorusStructure& x) {
    double sh = std::sinh(x.cuffLength / 2.0);
    double trA = 2.0 * std::cosh(x.cuffLength / 2.0);
    double trK = 2.0 * std::cosh(x.boundaryLength / 2.0);
    // Zero-twist B_0 symmetric across the imaginary axis: axis through i
    // orthogonal to A's, with tr B_0 solving the Fricke relation
    // trA^2 + trB^2 + trAB^2 - trA trB trAB - 2 = -trK at trAB = trA trB / 2.
    double chm = std::sqrt(trA * trA + trK - 2.0) / (2.0 * sh);
    double shm = std::sqrt(trK + 2.0) / (2.0 * sh); // chm^2 - shm^2 = 1 identically
    Isometry b0(chm, shm, shm, chm);
    Isometry a = Isometry::imaginaryAxisTranslation(x.cuffLength);
    Isometry b = Isometry::imaginaryAxisTranslation(x.twist) * b0;
    return HolonomyRep(x, a, b);
}

namespace {

struct FareyState {
    Slope target;
    long au, bu; // coefficients of the target in the current neighbor basis
};

// Coefficients of t in the neighbor basis (u, v); integer and positive when t
// lies strictly inside the cone.
FareyState startState(const Slope& s, long u0, long u1, long v0, long v1) {
    long det = u0 * v1 - u1 * v0; // +-1
    long a = (static_cast<long>(s.p) * v1 - static_cast<long>(s.q) * v0) / det;
    long b = (u0 * static_cast<long>(s.q) - u1 * static_cast<long>(s.p)) / det;
    return {s, a, b};
}

} // namespace

double HolonomyRep::slopeTrace(const Slope& s) const {
    double x = a_.trace(), y = b_.trace(), z = (a_ * b_).trace();
    if (s.q == 0) return x;
    if (s.p == 0) return y;
    double tu, tv, tw;
    FareyState st{};
    if (s.p > 0) {
        tu = x; tv = y; tw = z;
        st = startState(s, 1, 0, 0, 1);
    } else {
        tu = y; tv = x; tw = x * y - z; // mediant of (0,1), (-1,0) is B A^-1
        st = startState(s, 0, 1, -1, 0);
    }
    long a = st.au, b = st.bu;
    while (!(a == 1 && b == 1)) {
        if (a > b) {
            double t = tu * tw - tv; // ancestor (u, u+w): difference is v
            tv = tw; tw = t; a -= b;
        } else {
            double t = tw * tv - tu;
            tu = tw; tw = t; b -= a;
        }
    }
    return tw;
}

Isometry HolonomyRep::slopeWord(const Slope& s) const {
    if (s.q == 0) return a_;
    if (s.p == 0) return b_;
    Isometry u, v;
    FareyState st{};
    if (s.p > 0) {
        u = a_; v = b_;
        st = startState(s, 1, 0, 0, 1);
    } else {
        u = b_; v = a_.inverse();
        st = startState(s, 0, 1, -1, 0);
    }
    Isometry w = u * v;
    long a = st.au, b = st.bu;
    while (!(a == 1 && b == 1)) {
        if (a > b) { v = w; w = u * w; a -= b; }
        else       { u = w; w = w * v; b -= a; }
    }
    return w;
}

double HolonomyRep::closedLength(const Slope& s) const {
    double tr = std::fabs(slopeTrace(s));
    if (!std::isfinite(tr))
        throw NotHyperbolicError("closedLength: trace overflow (budget too large for doubles)");
    if (tr <= 2.0 + Isometry::kClassTol)
        throw NotHyperbolicError("closedLength: slope word is not hyperbolic");
    return 2.0 * acoshStable(tr / 2.0);
}

Isometry HolonomyRep::cutNormalizedWord(const Slope& s) const {
    // Representative of the slope class that pairs correctly with THIS
    // boundary word: cutting the torus along the slope gives a pants whose
    // boundary cuff is a conjugate g [A,B] g^-1, with g twisted along the
    // descent (a Nielsen move (U,V) -> (U,UV) conjugates the commutator by
    // U). Running the descent in that moving frame turns the bookkeeping
    // into plain products, (u,v) -> (u, vu) or (uv, v), which also avoids
    // the catastrophic cancellation of forming g^-1 W g explicitly.
    if (s.q == 0) return a_;
    if (s.p == 0) return b_;
    Isometry u, v;
    long a, b;
    if (s.p > 0) {
        u = a_; v = b_; a = s.p; b = s.q;
    } else {
        u = a_ * b_ * a_.inverse(); v = a_.inverse(); a = s.q; b = -s.p;
    }
    while (!(a == 1 && b == 1)) {
        if (a > b) { v = v * u; a -= b; }
        else       { u = u * v; b -= a; }
    }
    return u * v;
}

double HolonomyRep::arcLength(const Slope& s) const {
    Isometry w = cutNormalizedWord(s);
    Mat2 m = mul(mul(frameInv_, w.mat()), frame_);
    // In the boundary-axis frame the two lifts are (0, inf) and its image
    // under m; cosh dist = |m11 m22 + m12 m21| (the terms share a sign since
    // m11 m22 - m12 m21 = 1).
    double ch = std::fabs(m.a * m.d + m.b * m.c);
    if (!std::isfinite(ch))
        throw NotHyperbolicError("arcLength: overflow (budget too large for doubles)");
    if (ch < 1.0) ch = 1.0;
    return acoshStable(ch);
}

double HolonomyRep::doubledArcResidual(const Slope& s) const {
    return doubledArcResidual(s, mirror_);
}

double HolonomyRep::doubledArcResidual(const Slope& s, const Reflection& mirror) const {
    Isometry w = cutNormalizedWord(s);
    Isometry doubled = mirror.conjugate(w) * w.inverse();
    double len = doubled.translationLength();
    return std::fabs(2.0 * arcLength(s) - len) / len;
}

double doubledArcCheck(const HoledTorusStructure& x, const Slope& arcClass) {
    return HolonomyRep::build(x).doubledArcResidual(arcClass);
}

} // namespace teich
