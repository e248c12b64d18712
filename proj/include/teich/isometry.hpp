#pragma once

#include <cmath>

#include "teich/errors.hpp"

namespace teich {

// arccosh via log1p; stable for arguments near 1 (short geodesics).
inline double acoshStable(double x) {
    double d = x - 1.0;
    if (d < 0.0) d = 0.0; // clamp rounding noise below the branch point
    return std::log1p(d + std::sqrt(d * (d + 2.0)));
}

// Point of the boundary circle RP^1 = R u {inf}, kept projectively so the
// fixed point at infinity of an upper-triangular matrix needs no special case.
struct BoundaryPoint {
    double num = 0.0;
    double den = 1.0;

    static BoundaryPoint normalized(double n, double d) {
        double h = std::hypot(n, d);
        if (!(h > 0.0) || !std::isfinite(h))
            throw InvalidArgumentError("BoundaryPoint: degenerate homogeneous pair");
        return {n / h, d / h};
    }
    static BoundaryPoint finite(double x) { return normalized(x, 1.0); }
    static BoundaryPoint infinity() { return {1.0, 0.0}; }

    bool isInfinite(double tol = 1e-14) const { return std::fabs(den) <= tol; }
    double value() const { return num / den; }
};

inline double wedge(const BoundaryPoint& p, const BoundaryPoint& q) {
    return p.num * q.den - q.num * p.den;
}

inline bool samePoint(const BoundaryPoint& p, const BoundaryPoint& q, double tol = 1e-12) {
    return std::fabs(wedge(p, q)) <= tol;
}

// Oriented geodesic of H^2 given by its ideal endpoints.
struct Axis {
    BoundaryPoint attracting;
    BoundaryPoint repelling;
};

// Bare 2x2 real matrix; used for frames and reflections where det = -1 occurs.
struct Mat2 {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    double det() const { return a * d - b * c; }
    double trace() const { return a + d; }
};

inline Mat2 mul(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
            x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

// Inverse assuming |det| = 1 (exact adjugate divided by det).
inline Mat2 invUnit(const Mat2& m) {
    double dt = m.det();
    return {m.d / dt, -m.b / dt, -m.c / dt, m.a / dt};
}

enum class IsometryClass { Hyperbolic, Parabolic, Elliptic };

// Orientation-preserving isometry of the upper half-plane as a unit-determinant
// 2x2 real matrix acting by fractional linear transformation. Construction
// normalizes det to 1 and fixes the +-I ambiguity by trace >= 0.
struct Isometry {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

    static constexpr double kClassTol = 1e-12;

    Isometry() = default;
    Isometry(double a_, double b_, double c_, double d_);

    static Isometry identity() { return {}; }
    // diag(e^{t/2}, e^{-t/2}): translation of length |t| along the imaginary axis.
    static Isometry imaginaryAxisTranslation(double t);

    double trace() const { return a + d; }
    double det() const { return a * d - b * c; }
    Mat2 mat() const { return {a, b, c, d}; }

    Isometry inverse() const;
    IsometryClass classify() const;
    bool isHyperbolic() const { return classify() == IsometryClass::Hyperbolic; }

    // 2 arccosh(|tr|/2); throws NotHyperbolicError unless |trace| > 2 + tol.
    double translationLength() const;

    Axis axis() const;

    // Action on the boundary circle.
    BoundaryPoint apply(const BoundaryPoint& p) const;

    // Eigenframe E with columns (attracting, repelling) eigenvectors, |det E| = 1.
    // E^-1 carries the axis to the standard geodesic (0, inf).
    Mat2 axisFrame() const;
};

Isometry compose(const Isometry& g, const Isometry& h);
inline Isometry operator*(const Isometry& g, const Isometry& h) { return compose(g, h); }

bool approxEqual(const Isometry& g, const Isometry& h, double tol);

struct AxisDistance {
    double distance = 0.0;
    bool intersecting = false; // transversal crossing; equal/asymptotic axes give {0, false}
};

// Length of the common perpendicular. The cross-ratio of the four fixed points
// is evaluated in the eigenframe of g, which keeps full precision for large
// separations (see axisDistance(Axis, Axis) for the direct endpoint form).
AxisDistance axisDistance(const Isometry& g, const Isometry& h);

// Direct 4-endpoint cross-ratio form; fine for moderate distances.
AxisDistance axisDistance(const Axis& g, const Axis& h);

// Distance between axis(g) and its translate h . axis(g), with the
// cross-ratio evaluated in g's eigenframe: cosh dist = |m11 m22 + m12 m21|
// for m = E^-1 h E. Keeps full precision however far the translate sits.
AxisDistance axisImageDistance(const Isometry& g, const Isometry& h);

// Orientation-reversing involution z -> M(conj z) fixing a geodesic pointwise,
// as a det = -1 matrix with R^2 = I. Composition rules for real matrices:
// reflection o reflection and R W R are plain matrix products.
struct Reflection {
    Mat2 m;

    static Reflection acrossGeodesic(const BoundaryPoint& p, const BoundaryPoint& q);
    static Reflection across(const Axis& axis) { return acrossGeodesic(axis.attracting, axis.repelling); }

    Isometry conjugate(const Isometry& w) const; // R W R^-1
};

// Product of two reflections: hyperbolic translation of twice the distance
// between the mirrors (when disjoint).
Isometry compose(const Reflection& r1, const Reflection& r2);

} // namespace teich
