#include "teich/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace teich {

std::string to_string(MetricVariant v) {
    switch (v) {
        case MetricVariant::D: return "d";
        case MetricVariant::DBar: return "dbar";
        case MetricVariant::DeltaL: return "deltal";
        case MetricVariant::DL: return "dl";
        case MetricVariant::DArcsOnly: return "arcs-only";
    }
    throw InvalidArgumentError("unknown metric variant");
}

MetricVariant parseMetricVariant(const std::string& s) {
    if (s == "d") return MetricVariant::D;
    if (s == "dbar") return MetricVariant::DBar;
    if (s == "deltal") return MetricVariant::DeltaL;
    if (s == "dl") return MetricVariant::DL;
    if (s == "arcs-only") return MetricVariant::DArcsOnly;
    throw InvalidArgumentError("unknown metric variant '" + s +
                               "' (expected d|dbar|deltal|dl|arcs-only)");
}

LogSpectrum computeLogSpectrum(const TeichPoint& x, const EnumerationBudget& budget,
                               const ExecPolicy& policy) {
    budget.validate();
    EnumerationBudget full{budget.maxDenominator, true, true};
    LogSpectrum s;
    s.kind = surfaceKindOf(x);
    s.maxDenominator = budget.maxDenominator;
    s.classes = enumerate(s.kind, full);
    s.length = classLengths(x, s.classes, policy);
    s.logLength.resize(s.length.size());
    s.shell.resize(s.length.size());
    for (std::size_t i = 0; i < s.length.size(); ++i) {
        s.logLength[i] = std::log(s.length[i]);
        s.shell[i] = shellOf(s.classes[i]);
    }
    return s;
}

namespace {

// Domain of the supremum: C u B, B only (arcs + boundary), or C only.
enum class Domain { All, ArcsAndBoundary, ClosedOnly };

bool inDomain(const CurveClass& c, Domain dom) {
    switch (dom) {
        case Domain::All: return true;
        case Domain::ArcsAndBoundary: return isArcOrBoundaryClass(c);
        case Domain::ClosedOnly: return isClosedClass(c);
    }
    return false;
}

struct Scan {
    double value = -std::numeric_limits<double>::infinity();
    std::size_t argmax = 0;
};

// Truncated log sup of l_Y / l_X over the domain, restricted to shells <= cap.
// Ties keep the first class in canonical order.
Scan scanRatio(const LogSpectrum& x, const LogSpectrum& y, Domain dom, int cap) {
    Scan best;
    for (std::size_t i = 0; i < x.classes.size(); ++i) {
        if (x.shell[i] > cap) continue;
        if (!inDomain(x.classes[i], dom)) continue;
        double r = y.logLength[i] - x.logLength[i];
        if (r > best.value) { best.value = r; best.argmax = i; }
    }
    return best;
}

Domain domainOf(MetricVariant v) {
    switch (v) {
        case MetricVariant::DArcsOnly: return Domain::ArcsAndBoundary;
        case MetricVariant::DL: return Domain::ClosedOnly;
        default: return Domain::All;
    }
}

bool isSymmetrized(MetricVariant v) {
    return v == MetricVariant::DeltaL || v == MetricVariant::DL;
}

EnumerationBudget effectiveBudget(MetricVariant v, int maxDenominator) {
    EnumerationBudget b;
    b.maxDenominator = maxDenominator;
    b.includeArcs = domainOf(v) != Domain::ClosedOnly;
    b.includeBoundary = true;
    return b;
}

void requireComparable(const LogSpectrum& x, const LogSpectrum& y) {
    if (x.kind != y.kind)
        throw SurfaceMismatchError("metric: X and Y live on different surfaces");
    if (x.classes.size() != y.classes.size() || x.maxDenominator != y.maxDenominator)
        throw InvalidArgumentError("metric: spectra computed under different budgets");
}

void requireSameKind(const TeichPoint& x, const TeichPoint& y) {
    if (surfaceKindOf(x) != surfaceKindOf(y))
        throw SurfaceMismatchError("metric: X and Y live on different surfaces");
}

} // namespace

MetricReport evaluateMetric(MetricVariant variant, const LogSpectrum& sx, const LogSpectrum& sy,
                            int budgetCap) {
    requireComparable(sx, sy);
    int cap = budgetCap == 0 ? sx.maxDenominator : budgetCap;
    if (cap < 1 || cap > sx.maxDenominator)
        throw InvalidArgumentError("metric: budget cap outside the computed table");
    Domain dom = domainOf(variant);
    int prev = std::max(1, cap - 10);
    MetricReport rep;
    rep.variant = variant;
    rep.budgetUsed = effectiveBudget(variant, cap);
    const LogSpectrum& a = variant == MetricVariant::DBar ? sy : sx;
    const LogSpectrum& b = variant == MetricVariant::DBar ? sx : sy;
    if (!isSymmetrized(variant)) {
        Scan full = scanRatio(a, b, dom, cap);
        Scan trunc = scanRatio(a, b, dom, prev);
        rep.value = full.value;
        rep.maximizer = a.classes[full.argmax];
        rep.stabilityGap = full.value - trunc.value;
        return rep;
    }
    Scan fwd = scanRatio(sx, sy, dom, cap);
    Scan bwd = scanRatio(sy, sx, dom, cap);
    Scan fwdPrev = scanRatio(sx, sy, dom, prev);
    Scan bwdPrev = scanRatio(sy, sx, dom, prev);
    rep.value = std::max(fwd.value, bwd.value);
    rep.maximizer = bwd.value > fwd.value ? sy.classes[bwd.argmax] : sx.classes[fwd.argmax];
    rep.stabilityGap = rep.value - std::max(fwdPrev.value, bwdPrev.value);
    return rep;
}

MetricReport evaluateMetric(MetricVariant variant, const TeichPoint& x, const TeichPoint& y,
                            const EnumerationBudget& budget, const ExecPolicy& policy) {
    requireSameKind(x, y);
    LogSpectrum sx = computeLogSpectrum(x, budget, policy);
    LogSpectrum sy = computeLogSpectrum(y, budget, policy);
    return evaluateMetric(variant, sx, sy);
}

MetricReport dWeak(const TeichPoint& x, const TeichPoint& y, const EnumerationBudget& budget,
                   const ExecPolicy& policy) {
    return evaluateMetric(MetricVariant::D, x, y, budget, policy);
}

MetricReport dWeakArcsOnly(const TeichPoint& x, const TeichPoint& y,
                           const EnumerationBudget& budget, const ExecPolicy& policy) {
    return evaluateMetric(MetricVariant::DArcsOnly, x, y, budget, policy);
}

MetricReport dBar(const TeichPoint& x, const TeichPoint& y, const EnumerationBudget& budget,
                  const ExecPolicy& policy) {
    return evaluateMetric(MetricVariant::DBar, x, y, budget, policy);
}

MetricReport deltaL(const TeichPoint& x, const TeichPoint& y, const EnumerationBudget& budget,
                    const ExecPolicy& policy) {
    return evaluateMetric(MetricVariant::DeltaL, x, y, budget, policy);
}

MetricReport dL(const TeichPoint& x, const TeichPoint& y, const EnumerationBudget& budget,
                const ExecPolicy& policy) {
    return evaluateMetric(MetricVariant::DL, x, y, budget, policy);
}

double triangleProbe(const TeichPoint& x, const TeichPoint& y, const TeichPoint& z,
                     const EnumerationBudget& budget, MetricVariant variant,
                     const ExecPolicy& policy) {
    requireSameKind(x, y);
    requireSameKind(x, z);
    budget.validate();
    const LogSpectrum specs[3] = {computeLogSpectrum(x, budget, policy),
                                  computeLogSpectrum(y, budget, policy),
                                  computeLogSpectrum(z, budget, policy)};
    Domain dom = domainOf(variant);
    double val[3][3] = {};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            double fwd = scanRatio(specs[i], specs[j], dom, budget.maxDenominator).value;
            if (!isSymmetrized(variant)) {
                val[i][j] = variant == MetricVariant::DBar
                                ? scanRatio(specs[j], specs[i], dom, budget.maxDenominator).value
                                : fwd;
            } else {
                double bwd = scanRatio(specs[j], specs[i], dom, budget.maxDenominator).value;
                val[i][j] = std::max(fwd, bwd);
            }
        }
    double worst = std::numeric_limits<double>::infinity();
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            for (int c = 0; c < 3; ++c) {
                if (a == b || b == c || a == c) continue;
                worst = std::min(worst, val[a][b] + val[b][c] - val[a][c]);
            }
    return worst;
}

} // namespace teich
