#include "teich/thick.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <random>

namespace teich {

ThickPartSpec::ThickPartSpec(double eps, double eps0) : epsilon(eps), epsilonZero(eps0) {
    if (!(eps > 0.0) || !(eps <= eps0) || !std::isfinite(eps0))
        throw InvalidArgumentError("ThickPartSpec: need 0 < epsilon <= epsilon0");
}

namespace {

ThickCheck checkFromLengths(SurfaceKind kind, const std::vector<CurveClass>& classes,
                            const std::vector<double>& len, const ThickPartSpec& spec) {
    ThickCheck res;
    res.budgetRelative = kind == SurfaceKind::HoledTorus;
    res.minClosedLength = std::numeric_limits<double>::infinity();
    res.minArcLength = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        bool closed = isClosedClass(classes[i]);
        if (closed)
            res.minClosedLength = std::min(res.minClosedLength, len[i]);
        else
            res.minArcLength = std::min(res.minArcLength, len[i]);
        if (res.violator) continue;
        bool boundary = std::holds_alternative<PantsBoundary>(classes[i]) ||
                        std::holds_alternative<TorusBoundary>(classes[i]);
        if (closed && len[i] < spec.epsilon)
            res.violator = classes[i]; // condition (a)
        else if (boundary && len[i] > spec.epsilonZero)
            res.violator = classes[i]; // condition (b)
    }
    res.inThickPart = !res.violator.has_value();
    return res;
}

} // namespace

ThickCheck isInThickPart(const TeichPoint& x, const ThickPartSpec& spec,
                         const EnumerationBudget& budget, const ExecPolicy& policy) {
    budget.validate();
    EnumerationBudget full{budget.maxDenominator, /*includeArcs=*/true, /*includeBoundary=*/true};
    std::vector<CurveClass> classes = enumerate(surfaceKindOf(x), full);
    std::vector<double> len = classLengths(x, classes, policy);
    return checkFromLengths(surfaceKindOf(x), classes, len, spec);
}

double uniformFromBits(std::uint64_t bits, double lo, double hi) {
    double u = static_cast<double>(bits >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

namespace {

// Certified Kerckhoff-formula lower bound from precomputed tables: per closed
// class, E_Y >= l_Y/pi against E_X <= (l_X/2) e^{l_X/2}.
double kerckhoffFromTables(const LogSpectrum& x, const LogSpectrum& y) {
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < x.classes.size(); ++i) {
        if (!isClosedClass(x.classes[i])) continue;
        double r = std::log(y.length[i] / std::numbers::pi) - std::log(x.length[i] / 2.0) -
                   x.length[i] / 2.0;
        best = std::max(best, r);
    }
    return best / 2.0;
}

} // namespace

std::vector<ComparisonRecord> runSweep(const SweepConfig& config) {
    config.budget.validate();
    std::vector<std::array<double, 3>> candidates = config.points;
    if (candidates.empty()) {
        if (config.samples < 1)
            throw InvalidArgumentError("runSweep: need samples >= 1 or explicit points");
        std::mt19937_64 rng(config.seed);
        for (int i = 0; i < config.samples; ++i) {
            std::array<double, 3> c{};
            for (int k = 0; k < 3; ++k)
                c[static_cast<std::size_t>(k)] =
                    uniformFromBits(rng(), config.boxLo[static_cast<std::size_t>(k)],
                                    config.boxHi[static_cast<std::size_t>(k)]);
            candidates.push_back(c);
        }
    }

    // One table per accepted sample serves the thick filter and every pair.
    std::vector<LogSpectrum> tables;
    std::vector<std::array<double, 3>> acceptedCoords;
    for (const auto& c : candidates) {
        TeichPoint p = makePoint(config.kind, c);
        LogSpectrum table = computeLogSpectrum(p, config.budget, config.policy);
        if (checkFromLengths(table.kind, table.classes, table.length, config.thick).inThickPart) {
            tables.push_back(std::move(table));
            acceptedCoords.push_back(c);
        }
    }
    if (tables.empty())
        throw EmptySampleError("runSweep: no sampled point passes the thick-part filter");

    std::vector<std::pair<int, int>> pairs;
    for (std::size_t i = 0; i < tables.size(); ++i)
        for (std::size_t j = i; j < tables.size(); ++j)
            pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));

    std::vector<ComparisonRecord> records(pairs.size());
    detail::parallelFor(pairs.size(), config.policy, [&](std::size_t idx) {
        auto [i, j] = pairs[idx];
        const LogSpectrum& sx = tables[static_cast<std::size_t>(i)];
        const LogSpectrum& sy = tables[static_cast<std::size_t>(j)];
        MetricReport rd = evaluateMetric(MetricVariant::D, sx, sy);
        MetricReport rb = evaluateMetric(MetricVariant::DBar, sx, sy);
        ComparisonRecord rec;
        rec.sampleId = static_cast<int>(idx);
        rec.xIndex = i;
        rec.yIndex = j;
        rec.xCoords = acceptedCoords[static_cast<std::size_t>(i)];
        rec.yCoords = acceptedCoords[static_cast<std::size_t>(j)];
        rec.d = rd.value;
        rec.dBar = rb.value;
        rec.deltaL = std::max(rd.value, rb.value);
        rec.dL = evaluateMetric(MetricVariant::DL, sx, sy).value;
        rec.wolpertLB = rec.deltaL / 2.0;
        rec.kerckhoffLB = kerckhoffFromTables(sx, sy);
        rec.gap = std::fabs(rd.value - rb.value);
        rec.stabilityGap = std::max(rd.stabilityGap, rb.stabilityGap);
        rec.maximizerD = label(rd.maximizer);
        rec.maximizerDBar = label(rb.maximizer);
        records[idx] = rec;
    });
    return records;
}

GapStatistics gapStatistics(const std::vector<ComparisonRecord>& records) {
    if (records.empty()) throw EmptyInputError("gapStatistics: no records");
    GapStatistics st;
    st.recordCount = static_cast<int>(records.size());
    double sum = 0.0;
    int maxIndex = 0;
    std::map<std::pair<int, int>, double> delta;
    st.minSeparation = std::numeric_limits<double>::infinity();
    for (const auto& r : records) {
        st.maxGap = std::max(st.maxGap, r.gap);
        sum += r.gap;
        delta[{r.xIndex, r.yIndex}] = r.deltaL;
        delta[{r.yIndex, r.xIndex}] = r.deltaL;
        maxIndex = std::max({maxIndex, r.xIndex, r.yIndex});
        if (r.xCoords != r.yCoords) st.minSeparation = std::min(st.minSeparation, r.deltaL);
    }
    st.meanGap = sum / static_cast<double>(records.size());
    st.minTriangleDefect = std::numeric_limits<double>::infinity();
    for (int a = 0; a <= maxIndex; ++a)
        for (int b = 0; b <= maxIndex; ++b)
            for (int c = 0; c <= maxIndex; ++c) {
                if (a == b || b == c || a == c) continue;
                auto ab = delta.find({a, b}), bc = delta.find({b, c}), ac = delta.find({a, c});
                if (ab == delta.end() || bc == delta.end() || ac == delta.end()) continue;
                st.minTriangleDefect =
                    std::min(st.minTriangleDefect, ab->second + bc->second - ac->second);
            }
    return st;
}

} // namespace teich
