#pragma once

#include <string>

#include "teich/spectrum.hpp"

namespace teich {

enum class MetricVariant { D, DBar, DeltaL, DL, DArcsOnly };

std::string to_string(MetricVariant v);
MetricVariant parseMetricVariant(const std::string& s); // d|dbar|deltal|dl|arcs-only

// Truncated supremum of a length-ratio metric, with diagnostics. The value is
// a monotone lower approximation of the true supremum (exact for the pants,
// whose class family is finite); stabilityGap is the change from budget
// max(1, N-10) to N over the same prefix-ordered family.
struct MetricReport {
    MetricVariant variant = MetricVariant::D;
    double value = 0.0;
    CurveClass maximizer;
    EnumerationBudget budgetUsed;
    double stabilityGap = 0.0;
};

// Per-point length table over the full C u B family at a budget; the shell
// ordering makes every smaller budget a prefix, so one table serves all
// caps <= maxDenominator. Compute once per point, scan per pair.
struct LogSpectrum {
    SurfaceKind kind = SurfaceKind::Pants;
    int maxDenominator = 0;
    std::vector<CurveClass> classes;
    std::vector<double> length;
    std::vector<double> logLength;
    std::vector<int> shell;
};

LogSpectrum computeLogSpectrum(const TeichPoint& x, const EnumerationBudget& budget,
                               const ExecPolicy& policy = {});

// Evaluate against precomputed tables; budgetCap <= table budget restricts the
// scan to the corresponding prefix (0 means the full table budget).
MetricReport evaluateMetric(MetricVariant variant, const LogSpectrum& x, const LogSpectrum& y,
                            int budgetCap = 0);

// d(X,Y) = log sup l_Y / l_X over C u B (curves, arcs and boundary).
MetricReport dWeak(const TeichPoint& x, const TeichPoint& y, const EnumerationBudget& budget,
                   const ExecPolicy& policy = {});

// Same supremum restricted to B (arcs and boundary-parallel classes).
MetricReport dWeakArcsOnly(const TeichPoint& x, const TeichPoint& y,
                           const EnumerationBudget& budget, const ExecPolicy& policy = {});

// dbar(X,Y) = d(Y,X), shared code path.
MetricReport dBar(const TeichPoint& x, const TeichPoint& y, const EnumerationBudget& budget,
                  const ExecPolicy& policy = {});

// delta_L = max(d, dbar).
MetricReport deltaL(const TeichPoint& x, const TeichPoint& y, const EnumerationBudget& budget,
                    const ExecPolicy& policy = {});

// Symmetrized supremum over closed classes C only.
MetricReport dL(const TeichPoint& x, const TeichPoint& y, const EnumerationBudget& budget,
                const ExecPolicy& policy = {});

MetricReport evaluateMetric(MetricVariant variant, const TeichPoint& x, const TeichPoint& y,
                            const EnumerationBudget& budget, const ExecPolicy& policy = {});

// Worst signed triangle defect min over ordered triples of
// delta(a,b) + delta(b,c) - delta(a,c); nonnegative when the truncated values
// satisfy the triangle inequality.
double triangleProbe(const TeichPoint& x, const TeichPoint& y, const TeichPoint& z,
                     const EnumerationBudget& budget, MetricVariant variant,
                     const ExecPolicy& policy = {});

} // namespace teich
