#pragma once

#include <array>
#include <vector>

#include "teich/metrics.hpp"

namespace teich {

// Certified two-sided bounds on an extremal length.
struct ExtremalBoundPair {
    double lower = 0.0;
    double upper = 0.0;
};

// Maskit's bounds l/pi <= E_X(gamma) <= (l/2) e^{l/2} for closed classes.
ExtremalBoundPair maskitBounds(double length); // throws NonpositiveLengthError

// E_X(gamma) >= l^2 / (2 pi |chi|), from area 2 pi |chi| of hyperbolic metrics.
double areaLowerBound(double length, int chi); // throws on chi >= 0

// Conformal modulus of an annulus, normalized as (1/2pi) log(r2/r1).
struct Modulus {
    double value = 1.0;

    Modulus() = default;
    explicit Modulus(double v);
};

// Extremal length of the core curve (1/M) and hyperbolic core geodesic length
// (pi/M) of the complete annulus of modulus M. The pair attains Maskit's
// lower bound: E = l/pi exactly.
struct AnnulusCoreData {
    double extremalLength = 0.0;
    double coreGeodesicLength = 0.0;
};

AnnulusCoreData annulusCoreData(const Modulus& m);

// d_T >= delta_L / 2 (Wolpert); a certified lower bound at the truncated level.
double teichLowerBoundWolpert(const TeichPoint& x, const TeichPoint& y,
                              const EnumerationBudget& budget, const ExecPolicy& policy = {});

// d_T = (1/2) log sup E_Y/E_X chained with Maskit's bounds per closed class:
// (1/2) log max (l_Y/pi) / ((l_X/2) e^{l_X/2}). May be negative (vacuous) but
// is always a valid lower bound.
double teichLowerBoundKerckhoff(const TeichPoint& x, const TeichPoint& y,
                                const EnumerationBudget& budget, const ExecPolicy& policy = {});

// Certified ledger along the Nielsen extension sequence of a pants structure.
// Per boundary i with initial geodesic length l_i, each extension stage glues
// a funnel of modulus pi/(2 u) onto each side of the core geodesic, where u is
// the current certified length upper bound; serial annuli add moduli, so
//   M_n = sum_{k<n} pi / u_k   (modulus lower bound, M_0 = 0),
//   u_n = pi / M_n = 1 / sum_{k<n} 1/u_k   (via E <= 1/M and l <= pi E),
// which gives u_n = l_i / 2^{n-1} for n >= 1. The certified lower bound for
// TBar(X, X_n) is (1/2) log((l_i/pi) M_n), diverging like (n-1) log(2)/2.
struct NielsenStage {
    int stage = 0;
    std::array<double, 3> modulusLB{};
    std::array<double, 3> lengthUB{};
    std::array<double, 3> tBarLB{}; // -inf at stage 0 (vacuous)
};

struct NielsenLedger {
    std::array<double, 3> initialBoundaryLengths{};
    std::vector<NielsenStage> stages; // stage n = 0 .. requested-1

    double tBarLowerBound(int stage) const; // max over boundaries
};

NielsenLedger nielsenLedger(const PantsStructure& x0, int stages); // stages >= 1

// Per boundary: true once the certified upper bound 1/M_n on E_{X_n}(C'_i)
// drops below the certified lower bound l_i/pi on E_{X_0}(C'_i).
std::array<bool, 3> monotonicityCertificate(const NielsenLedger& ledger, int stage);
std::array<bool, 3> monotonicityCertificate(const PantsStructure& x0, int stage);

} // namespace teich
