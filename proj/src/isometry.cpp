#include "teich/isometry.hpp"

#include <algorithm>

namespace teich {

Isometry::Isometry(double a_, double b_, double c_, double d_) : a(a_), b(b_), c(c_), d(d_) {
    double ad = a * d, bc = b * c;
    double dt = ad - bc;
    double scale = std::fabs(ad) + std::fabs(bc);
    if (!std::isfinite(dt) || !std::isfinite(scale))
        throw InvalidArgumentError("Isometry: entries overflow");
    // ad - bc carries measurement noise ~ eps * scale. Rescale only when the
    // deviation from 1 exceeds that noise; "fixing" unit-determinant products
    // by their mismeasured determinant would corrupt them instead.
    if (std::fabs(dt - 1.0) > 64.0 * 2.220446049250313e-16 * std::max(1.0, scale)) {
        if (dt <= 0.0)
            throw InvalidArgumentError("Isometry: determinant must be positive and finite");
        double s = std::sqrt(dt);
        a /= s; b /= s; c /= s; d /= s;
    }
    bool flip = false;
    double tr = a + d;
    if (tr < 0.0)
        flip = true;
    else if (tr == 0.0 && (a < 0.0 || (a == 0.0 && b < 0.0)))
        flip = true; // deterministic sign for traceless elements
    if (flip) { a = -a; b = -b; c = -c; d = -d; }
}

Isometry Isometry::imaginaryAxisTranslation(double t) {
    double e = std::exp(t / 2.0);
    return Isometry(e, 0.0, 0.0, 1.0 / e);
}

Isometry Isometry::inverse() const {
    return Isometry(d, -b, -c, a);
}

IsometryClass Isometry::classify() const {
    double tr = std::fabs(trace());
    if (tr > 2.0 + kClassTol) return IsometryClass::Hyperbolic;
    if (tr >= 2.0 - kClassTol) return IsometryClass::Parabolic;
    return IsometryClass::Elliptic;
}

double Isometry::translationLength() const {
    if (classify() != IsometryClass::Hyperbolic)
        throw NotHyperbolicError("translationLength: |trace| <= 2, no closed geodesic");
    return 2.0 * acoshStable(std::fabs(trace()) / 2.0);
}

namespace {

// Eigenvector of [[a,b],[c,d]] for eigenvalue e, from whichever row of
// (M - e I) is better conditioned.
BoundaryPoint eigenvector(double a, double b, double c, double d, double e) {
    double n1 = std::fabs(b) + std::fabs(e - a);
    double n2 = std::fabs(e - d) + std::fabs(c);
    if (n1 >= n2) return BoundaryPoint::normalized(b, e - a);
    return BoundaryPoint::normalized(e - d, c);
}

} // namespace

Axis Isometry::axis() const {
    if (classify() != IsometryClass::Hyperbolic)
        throw NotHyperbolicError("axis: |trace| <= 2, no axis");
    double tr = trace(); // normalized >= 0, here > 2
    double s = std::sqrt((tr - 2.0) * (tr + 2.0));
    double lam = (tr + s) / 2.0;  // attracting eigenvalue, > 1
    double mu = 2.0 / (tr + s);   // repelling eigenvalue = 1/lam, no cancellation
    return {eigenvector(a, b, c, d, lam), eigenvector(a, b, c, d, mu)};
}

BoundaryPoint Isometry::apply(const BoundaryPoint& p) const {
    return BoundaryPoint::normalized(a * p.num + b * p.den, c * p.num + d * p.den);
}

Mat2 Isometry::axisFrame() const {
    Axis ax = axis();
    Mat2 e{ax.attracting.num, ax.repelling.num, ax.attracting.den, ax.repelling.den};
    double dt = e.det();
    if (std::fabs(dt) < 1e-300)
        throw NotHyperbolicError("axisFrame: coincident fixed points");
    double s = std::sqrt(std::fabs(dt));
    return {e.a / s, e.b / s, e.c / s, e.d / s};
}

Isometry compose(const Isometry& g, const Isometry& h) {
    return Isometry(g.a * h.a + g.b * h.c, g.a * h.b + g.b * h.d,
                    g.c * h.a + g.d * h.c, g.c * h.b + g.d * h.d);
}

bool approxEqual(const Isometry& g, const Isometry& h, double tol) {
    return std::fabs(g.a - h.a) <= tol && std::fabs(g.b - h.b) <= tol &&
           std::fabs(g.c - h.c) <= tol && std::fabs(g.d - h.d) <= tol;
}

AxisDistance axisDistance(const Isometry& g, const Isometry& h) {
    Mat2 frame = g.axisFrame();
    Mat2 m = mul(mul(invUnit(frame), h.mat()), frame);
    // In this frame g's axis is (0, inf); h's axis has endpoints p, q with
    // p + q = (m11 - m22)/m21 and (p - q)^2 = (tr^2 - 4)/m21^2, so the
    // cross-ratio collapses to cosh dist = |m11 - m22| / sqrt(tr^2 - 4).
    double tr = m.trace();
    double disc = tr * tr - 4.0;
    if (disc <= 0.0)
        throw NotHyperbolicError("axisDistance: second argument not hyperbolic");
    if (std::fabs(m.c) < 1e-300 || std::fabs(m.b) < 1e-300)
        return {0.0, false}; // shared fixed point with (0, inf): equal or asymptotic axes
    // crossing iff the endpoints p q = -m12/m21 have opposite signs
    if (-m.b / m.c < 0.0) return {0.0, true};
    double ch = std::fabs(m.a - m.d) / std::sqrt(disc);
    if (ch < 1.0) ch = 1.0;
    return {acoshStable(ch), false};
}

AxisDistance axisDistance(const Axis& g, const Axis& h) {
    const BoundaryPoint &a = g.attracting, &b = g.repelling;
    const BoundaryPoint &c = h.attracting, &d = h.repelling;
    if ((samePoint(a, c) && samePoint(b, d)) || (samePoint(a, d) && samePoint(b, c)))
        return {0.0, false};
    double num = wedge(c, a) * wedge(d, b);
    double den = wedge(c, b) * wedge(d, a);
    if (den == 0.0) return {0.0, false}; // asymptotic
    double u = num / den;
    if (u < 0.0) return {0.0, true};
    if (u == 1.0)
        throw InvalidArgumentError("axisDistance: degenerate axis endpoints");
    double ch = std::fabs((1.0 + u) / (1.0 - u));
    if (ch < 1.0) ch = 1.0;
    return {acoshStable(ch), false};
}

AxisDistance axisImageDistance(const Isometry& g, const Isometry& h) {
    Mat2 frame = g.axisFrame();
    Mat2 m = mul(mul(invUnit(frame), h.mat()), frame);
    // The lifts are (0, inf) and its m-image; the cross-ratio collapses to
    // |m11 m22 + m12 m21|, which is cosh(dist) when the geodesics are
    // disjoint, |cos(angle)| when they cross, and 1 when asymptotic. The two
    // products share a sign in the disjoint case since m11 m22 - m12 m21 = 1.
    double ch = std::fabs(m.a * m.d + m.b * m.c);
    if (!std::isfinite(ch)) throw NotHyperbolicError("axisImageDistance: overflow");
    if (ch <= 1.0) return {0.0, ch < 1.0 - 1e-12};
    return {acoshStable(ch), false};
}

Reflection Reflection::acrossGeodesic(const BoundaryPoint& p, const BoundaryPoint& q) {
    double w = wedge(p, q);
    if (std::fabs(w) < 1e-300)
        throw InvalidArgumentError("Reflection: endpoints must be distinct");
    double s = std::fabs(w);
    // Inversion in the circle/line through p and q, written projectively.
    double t = p.num * q.den + q.num * p.den;
    return {{t / s, -2.0 * p.num * q.num / s, 2.0 * p.den * q.den / s, -t / s}};
}

Isometry Reflection::conjugate(const Isometry& w) const {
    Mat2 r = mul(mul(m, w.mat()), invUnit(m));
    return Isometry(r.a, r.b, r.c, r.d);
}

Isometry compose(const Reflection& r1, const Reflection& r2) {
    Mat2 p = mul(r1.m, r2.m);
    return Isometry(p.a, p.b, p.c, p.d);
}

} // namespace teich
