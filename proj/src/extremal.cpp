#include "teich/extremal.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace teich {

namespace {
constexpr double kPi = std::numbers::pi;
}

ExtremalBoundPair maskitBounds(double length) {
    if (!(length > 0.0) || !std::isfinite(length))
        throw NonpositiveLengthError("maskitBounds: length must be positive");
    return {length / kPi, (length / 2.0) * std::exp(length / 2.0)};
}

double areaLowerBound(double length, int chi) {
    if (!(length > 0.0) || !std::isfinite(length))
        throw NonpositiveLengthError("areaLowerBound: length must be positive");
    if (chi >= 0) throw BadEulerError("areaLowerBound: Euler characteristic must be negative");
    return length * length / (2.0 * kPi * std::abs(chi));
}

Modulus::Modulus(double v) : value(v) {
    if (!(v > 0.0) || !std::isfinite(v))
        throw NonpositiveModulusError("Modulus: value must be positive and finite");
}

AnnulusCoreData annulusCoreData(const Modulus& m) {
    return {1.0 / m.value, kPi / m.value};
}

double teichLowerBoundWolpert(const TeichPoint& x, const TeichPoint& y,
                              const EnumerationBudget& budget, const ExecPolicy& policy) {
    return deltaL(x, y, budget, policy).value / 2.0;
}

double teichLowerBoundKerckhoff(const TeichPoint& x, const TeichPoint& y,
                                const EnumerationBudget& budget, const ExecPolicy& policy) {
    if (surfaceKindOf(x) != surfaceKindOf(y))
        throw SurfaceMismatchError("teichLowerBoundKerckhoff: X and Y on different surfaces");
    budget.validate();
    EnumerationBudget closed{budget.maxDenominator, /*includeArcs=*/false, /*includeBoundary=*/true};
    std::vector<CurveClass> classes = enumerate(surfaceKindOf(x), closed);
    std::vector<double> lx = classLengths(x, classes, policy);
    std::vector<double> ly = classLengths(y, classes, policy);
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < classes.size(); ++i) {
        // log of (l_Y/pi) / ((l_X/2) e^{l_X/2})
        double r = std::log(ly[i] / kPi) - std::log(lx[i] / 2.0) - lx[i] / 2.0;
        best = std::max(best, r);
    }
    return best / 2.0;
}

NielsenLedger nielsenLedger(const PantsStructure& x0, int stages) {
    if (stages < 1) throw InvalidArgumentError("nielsenLedger: stages must be >= 1");
    NielsenLedger ledger;
    ledger.initialBoundaryLengths = x0.cuffLengths;
    std::array<double, 3> invSum{0.0, 0.0, 0.0}; // sum of 1/u_k so far
    std::array<double, 3> u = x0.cuffLengths;
    for (int n = 0; n < stages; ++n) {
        NielsenStage row;
        row.stage = n;
        for (int i = 0; i < 3; ++i) {
            double m = kPi * invSum[static_cast<std::size_t>(i)];
            row.modulusLB[static_cast<std::size_t>(i)] = m;
            if (n > 0) u[static_cast<std::size_t>(i)] = kPi / m;
            row.lengthUB[static_cast<std::size_t>(i)] = u[static_cast<std::size_t>(i)];
            double li = x0.cuffLengths[static_cast<std::size_t>(i)];
            row.tBarLB[static_cast<std::size_t>(i)] =
                n == 0 ? -std::numeric_limits<double>::infinity() : 0.5 * std::log(li / kPi * m);
        }
        ledger.stages.push_back(row);
        for (int i = 0; i < 3; ++i) invSum[static_cast<std::size_t>(i)] += 1.0 / u[static_cast<std::size_t>(i)];
    }
    return ledger;
}

double NielsenLedger::tBarLowerBound(int stage) const {
    if (stage < 0 || stage >= static_cast<int>(stages.size()))
        throw IndexOutOfRangeError("NielsenLedger::tBarLowerBound: stage out of range");
    const auto& t = stages[static_cast<std::size_t>(stage)].tBarLB;
    return std::max({t[0], t[1], t[2]});
}

std::array<bool, 3> monotonicityCertificate(const NielsenLedger& ledger, int stage) {
    if (stage < 0 || stage >= static_cast<int>(ledger.stages.size()))
        throw IndexOutOfRangeError("monotonicityCertificate: stage out of range");
    std::array<bool, 3> cert{};
    for (int i = 0; i < 3; ++i) {
        double m = ledger.stages[static_cast<std::size_t>(stage)].modulusLB[static_cast<std::size_t>(i)];
        double li = ledger.initialBoundaryLengths[static_cast<std::size_t>(i)];
        cert[static_cast<std::size_t>(i)] = m * li > kPi; // 1/M_n < l_i/pi
    }
    return cert;
}

std::array<bool, 3> monotonicityCertificate(const PantsStructure& x0, int stage) {
    return monotonicityCertificate(nielsenLedger(x0, stage + 1), stage);
}

} // namespace teich
