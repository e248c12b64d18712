#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "teich/errors.hpp"

namespace teich {

enum class SurfaceKind { Pants, HoledTorus };

std::string to_string(SurfaceKind kind);
SurfaceKind parseSurfaceKind(const std::string& s);

// Primitive slope on the one-holed torus, normalized to q > 0, or (1, 0).
// (p, q) and (-p, -q) label the same unoriented class.
struct Slope {
    int p = 1;
    int q = 0;

    static Slope make(int p, int q); // throws InvalidArgumentError unless primitive
    int shell() const; // max(|p|, |q|)

    friend bool operator==(const Slope&, const Slope&) = default;
    friend auto operator<=>(const Slope&, const Slope&) = default;
};

// Essential simple arc classes of the pair of pants: one class between each
// pair of distinct cuffs, one from each cuff to itself. Indices are 1-based.
struct PantsArcClass {
    enum class Kind { Between, Self };
    Kind kind = Kind::Between;
    int i = 1;
    int j = 2; // == i for Self

    static PantsArcClass between(int i, int j); // requires 1 <= i < j <= 3
    static PantsArcClass selfArc(int i);        // requires 1 <= i <= 3

    friend bool operator==(const PantsArcClass&, const PantsArcClass&) = default;
};

struct PantsBoundary {
    int index = 1; // 1..3
    friend bool operator==(const PantsBoundary&, const PantsBoundary&) = default;
};
struct PantsArc {
    PantsArcClass arc;
    friend bool operator==(const PantsArc&, const PantsArc&) = default;
};
struct TorusBoundary {
    friend bool operator==(const TorusBoundary&, const TorusBoundary&) = default;
};
struct TorusCurve {
    Slope slope;
    friend bool operator==(const TorusCurve&, const TorusCurve&) = default;
};
struct TorusArc {
    Slope slope; // the arc class disjoint from the slope-(p,q) curve
    friend bool operator==(const TorusArc&, const TorusArc&) = default;
};

// One homotopy class in C u B.
using CurveClass = std::variant<PantsBoundary, PantsArc, TorusBoundary, TorusCurve, TorusArc>;

bool isClosedClass(const CurveClass& c);       // member of C
bool isArcOrBoundaryClass(const CurveClass& c); // member of B
SurfaceKind surfaceOf(const CurveClass& c);
int shellOf(const CurveClass& c); // 0 for boundary and pants classes

// Canonical text labels, also accepted by the CLI --class flag:
//   pants: "boundary:1", "between:1,2", "self:2"
//   torus: "boundary", "slope:p,q", "arc:p,q"
std::string label(const CurveClass& c);
CurveClass parseClassLabel(SurfaceKind kind, const std::string& text);

struct EnumerationBudget {
    int maxDenominator = 20; // bound on max(|p|, |q|)
    bool includeArcs = true;
    bool includeBoundary = true;

    void validate() const {
        if (maxDenominator < 1)
            throw InvalidArgumentError("EnumerationBudget: maxDenominator must be >= 1");
    }
};

// Canonical ordered class list. Boundary first, then shell-major
// (max(|p|,|q|), curves before arcs, then (p, q)); for the pants the full
// finite family in a fixed order, independent of maxDenominator.
// Lists for growing budgets are prefixes of one another.
std::vector<CurveClass> enumerate(SurfaceKind kind, const EnumerationBudget& budget);

// Number of normalized primitive pairs with max(|p|,|q|) <= n,
// via coprime counting per denominator (tests cross-check a gcd scan).
std::int64_t countPrimitive(int n);

struct SpectrumEntry {
    CurveClass curveClass;
    double length = 0.0;
};

} // namespace teich
