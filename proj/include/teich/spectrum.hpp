#pragma once

#include <array>
#include <variant>
#include <vector>

#include "teich/curves.hpp"
#include "teich/exec.hpp"
#include "teich/pants.hpp"
#include "teich/torus.hpp"

namespace teich {

// A marked hyperbolic structure on one of the supported surfaces.
using TeichPoint = std::variant<PantsStructure, HoledTorusStructure>;

SurfaceKind surfaceKindOf(const TeichPoint& x);
std::array<double, 3> coordsOf(const TeichPoint& x);
TeichPoint makePoint(SurfaceKind kind, const std::array<double, 3>& coords);

// Geodesic length of a single class on the given structure.
double classLength(const TeichPoint& x, const CurveClass& c);

// OpenMP kernel: lengths of the given classes, one slot per class.
std::vector<double> classLengths(const TeichPoint& x, const std::vector<CurveClass>& classes,
                                 const ExecPolicy& policy = {});

namespace ref {
// Serial reference implementation of the kernel, kept for tests and the
// benchmark target.
std::vector<double> classLengths(const TeichPoint& x, const std::vector<CurveClass>& classes);
} // namespace ref

// One entry per enumerated class under the budget, in canonical order.
std::vector<SpectrumEntry> lengthSpectrum(const TeichPoint& x, const EnumerationBudget& budget,
                                          const ExecPolicy& policy = {});

} // namespace teich
