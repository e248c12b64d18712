#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "teich/extremal.hpp"

namespace teich {

// epsilon0-relative epsilon-thick part: every closed class has length >= eps,
// every boundary component has length <= eps0.
struct ThickPartSpec {
    double epsilon = 0.5;
    double epsilonZero = 2.0;

    ThickPartSpec() = default;
    ThickPartSpec(double eps, double eps0);
};

struct ThickCheck {
    bool inThickPart = false;
    std::optional<CurveClass> violator;
    // Torus membership is certified only relative to the enumerated family;
    // a violation is exact either way.
    bool budgetRelative = false;
    double minClosedLength = 0.0;
    double minArcLength = 0.0; // reported diagnostic, not part of the definition
};

ThickCheck isInThickPart(const TeichPoint& x, const ThickPartSpec& spec,
                         const EnumerationBudget& budget, const ExecPolicy& policy = {});

// Sample source: explicit points if nonempty, otherwise `samples` seeded
// uniform draws from the coordinate box.
struct SweepConfig {
    SurfaceKind kind = SurfaceKind::Pants;
    std::vector<std::array<double, 3>> points;
    std::array<double, 3> boxLo{1.0, 1.0, 1.0};
    std::array<double, 3> boxHi{2.0, 2.0, 2.0};
    int samples = 10;
    std::uint64_t seed = 1;
    EnumerationBudget budget;
    ThickPartSpec thick;
    ExecPolicy policy;
};

struct ComparisonRecord {
    int sampleId = 0;
    int xIndex = 0, yIndex = 0; // indices into the accepted sample list
    std::array<double, 3> xCoords{}, yCoords{};
    double d = 0.0, dBar = 0.0, deltaL = 0.0, dL = 0.0;
    double wolpertLB = 0.0, kerckhoffLB = 0.0;
    double gap = 0.0;          // |d - dBar|
    double stabilityGap = 0.0; // max of the one-sided stability gaps
    std::string maximizerD, maximizerDBar;
};

// All ordered pairs i <= j of the thick-part-accepted samples, in canonical
// order; deterministic given (config, seed) and independent of worker count.
std::vector<ComparisonRecord> runSweep(const SweepConfig& config); // throws EmptySampleError

struct GapStatistics {
    int recordCount = 0;
    double maxGap = 0.0;
    double meanGap = 0.0;
    // min over sample triples of deltaL(i,j) + deltaL(j,k) - deltaL(i,k);
    // +inf when fewer than 3 samples.
    double minTriangleDefect = 0.0;
    // min deltaL over records with distinct endpoints; +inf when none.
    double minSeparation = 0.0;
};

GapStatistics gapStatistics(const std::vector<ComparisonRecord>& records); // throws EmptyInputError

// Portable seeded uniform draw used by the sweep sampler (kept public so the
// byte-stability of outputs does not depend on std::uniform_real_distribution).
double uniformFromBits(std::uint64_t bits, double lo, double hi);

} // namespace teich
