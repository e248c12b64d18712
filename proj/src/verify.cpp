#include "teich/verify.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <numbers>
#include <random>
#include <sstream>

#include "teich/csvio.hpp"
#include "teich/metrics.hpp"
#include "teich/pants_double.hpp"
#include "teich/thick.hpp"

namespace teich {

namespace {

struct Suite {
    bool inject = false;
    std::vector<InvariantResult> results;

    void check(const std::string& name, const std::function<bool(std::string&)>& fn) {
        InvariantResult r;
        r.name = name;
        try {
            r.pass = fn(r.detail);
        } catch (const std::exception& e) {
            r.pass = false;
            r.detail = e.what();
        }
        results.push_back(r);
    }
};

Isometry randomHyperbolic(std::mt19937_64& rng) {
    auto uni = [&](double lo, double hi) { return uniformFromBits(rng(), lo, hi); };
    Isometry t = Isometry::imaginaryAxisTranslation(uni(0.3, 2.2));
    Isometry k(1.0, uni(-0.75, 0.75), 0.0, 1.0);
    Isometry m(1.0, 0.0, uni(-0.75, 0.75), 1.0);
    return k * m * t * m.inverse() * k.inverse();
}

HoledTorusStructure randomTorus(std::mt19937_64& rng) {
    auto uni = [&](double lo, double hi) { return uniformFromBits(rng(), lo, hi); };
    return {uni(0.5, 2.0), uni(-1.0, 1.0), uni(0.5, 2.0)};
}

} // namespace

std::vector<InvariantResult> runInvariantSuite(bool injectFailure) {
    Suite s;
    s.inject = injectFailure;

    s.check("isometry.translation_length_inverse", [&](std::string& detail) {
        std::mt19937_64 rng(11);
        double worst = 0;
        for (int i = 0; i < 50; ++i) {
            Isometry g = randomHyperbolic(rng);
            double delta = std::fabs(g.translationLength() - g.inverse().translationLength());
            worst = std::max(worst, delta);
        }
        if (s.inject) worst += 1.0; // negative-control hook
        detail = "worst |len(g) - len(g^-1)| = " + fmt17(worst);
        return worst <= 1e-12;
    });

    s.check("isometry.translation_length_powers", [&](std::string& detail) {
        std::mt19937_64 rng(12);
        double worst = 0;
        for (int i = 0; i < 20; ++i) {
            Isometry g = randomHyperbolic(rng);
            Isometry p = g;
            for (int n = 2; n <= 10; ++n) {
                p = p * g;
                worst = std::max(worst,
                                 std::fabs(p.translationLength() - n * g.translationLength()));
            }
        }
        detail = "worst |len(g^n) - n len(g)| = " + fmt17(worst);
        return worst <= 1e-9;
    });

    s.check("isometry.axis_distance_conjugation", [&](std::string& detail) {
        std::mt19937_64 rng(13);
        double worst = 0;
        for (int i = 0; i < 30; ++i) {
            Isometry g = randomHyperbolic(rng), h = randomHyperbolic(rng);
            Isometry k = randomHyperbolic(rng);
            double d1 = axisDistance(g, h).distance;
            double d2 = axisDistance(k * g * k.inverse(), k * h * k.inverse()).distance;
            worst = std::max(worst, std::fabs(d1 - d2));
        }
        detail = "worst conjugation drift = " + fmt17(worst);
        return worst <= 1e-10;
    });

    s.check("isometry.axis_distance_symmetric", [&](std::string& detail) {
        std::mt19937_64 rng(14);
        double worst = 0;
        for (int i = 0; i < 30; ++i) {
            Isometry g = randomHyperbolic(rng), h = randomHyperbolic(rng);
            worst = std::max(worst, std::fabs(axisDistance(g, h).distance -
                                              axisDistance(h, g).distance));
        }
        detail = "worst asymmetry = " + fmt17(worst);
        return worst <= 1e-10;
    });

    s.check("pants.between_symmetric", [&](std::string&) {
        PantsStructure x(0.8, 1.7, 2.4);
        for (int i = 1; i <= 3; ++i)
            for (int j = 1; j <= 3; ++j)
                if (i != j && betweenCuffsLength(x, i, j) != betweenCuffsLength(x, j, i))
                    return false;
        return true;
    });

    s.check("pants.doubling_agreement", [&](std::string& detail) {
        std::mt19937_64 rng(15);
        double worst = 0;
        for (int it = 0; it < 10; ++it) {
            PantsStructure x(uniformFromBits(rng(), 0.4, 3.0), uniformFromBits(rng(), 0.4, 3.0),
                             uniformFromBits(rng(), 0.4, 3.0));
            PantsDouble dbl(x);
            for (const auto& e : pantsSpectrum(x)) {
                if (const auto* a = std::get_if<PantsArc>(&e.curveClass)) {
                    double o = dbl.arcLengthFromDouble(a->arc);
                    worst = std::max(worst, std::fabs(e.length - o) / o);
                }
            }
        }
        detail = "worst relative arc disagreement = " + fmt17(worst);
        return worst <= 1e-9;
    });

    s.check("pants.scaling_probe", [&](std::string&) {
        for (double a = 0.5; a <= 4.0; a += 0.25) {
            PantsStructure x(a, a, a), y(2 * a, 2 * a, 2 * a);
            if (y.cuff(1) / x.cuff(1) != 2.0) return false;
            if (betweenCuffsLength(y, 1, 2) / betweenCuffsLength(x, 1, 2) >= 2.0) return false;
            if (selfArcLength(y, 1) / selfArcLength(x, 1) >= 2.0) return false;
        }
        return true;
    });

    s.check("torus.trace_identities", [&](std::string& detail) {
        std::mt19937_64 rng(16);
        double worst = 0;
        for (int i = 0; i < 100; ++i) {
            HolonomyRep rep = HolonomyRep::build(randomTorus(rng));
            double x = rep.generatorA().trace(), y = rep.generatorB().trace();
            double z = (rep.generatorA() * rep.generatorB()).trace();
            double markov =
                std::fabs((rep.generatorA() * rep.generatorB().inverse()).trace() - (x * y - z));
            Mat2 raw = mul(mul(mul(rep.generatorA().mat(), rep.generatorB().mat()),
                               rep.generatorA().inverse().mat()),
                           rep.generatorB().inverse().mat());
            double comm = raw.trace() - (x * x + y * y + z * z - x * y * z - 2.0);
            worst = std::max({worst, markov, std::fabs(comm)});
        }
        detail = "worst trace-identity residual = " + fmt17(worst);
        return worst <= 1e-10;
    });

    s.check("torus.boundary_trace", [&](std::string& detail) {
        std::mt19937_64 rng(17);
        double worst = 0;
        for (int i = 0; i < 100; ++i) {
            HoledTorusStructure x = randomTorus(rng);
            HolonomyRep rep = HolonomyRep::build(x);
            worst = std::max(worst, std::fabs(std::fabs(rep.boundaryWord().trace()) -
                                              2.0 * std::cosh(x.boundaryLength / 2.0)));
        }
        detail = "worst |tr K - 2cosh(L/2)| = " + fmt17(worst);
        return worst <= 1e-9;
    });

    s.check("torus.twist_periodicity", [&](std::string& detail) {
        double worst = 0;
        for (double tau : {-3.0, -0.7, 0.0, 0.4, 2.2}) {
            HolonomyRep rep = HolonomyRep::build({1.3, tau, 0.9});
            worst = std::max(worst, std::fabs(rep.closedLength(Slope::make(1, 0)) - 1.3));
        }
        detail = "worst |len(1,0) - l| over twists = " + fmt17(worst);
        return worst <= 1e-12;
    });

    s.check("torus.doubled_arc_residual", [&](std::string& detail) {
        std::mt19937_64 rng(18);
        double worst = 0;
        for (int i = 0; i < 20; ++i) {
            HolonomyRep rep = HolonomyRep::build(randomTorus(rng));
            for (auto [p, q] : {std::pair{1, 0}, {0, 1}, {1, 1}, {-1, 1}, {3, 2}, {-2, 5}})
                worst = std::max(worst, rep.doubledArcResidual(Slope::make(p, q)));
        }
        detail = "worst doubling residual = " + fmt17(worst);
        return worst <= 1e-9;
    });

    s.check("torus.arc_cut_pants_agreement", [&](std::string& detail) {
        std::mt19937_64 rng(23);
        double worst = 0;
        for (int it = 0; it < 5; ++it) {
            HoledTorusStructure x = randomTorus(rng);
            HolonomyRep rep = HolonomyRep::build(x);
            for (int p = -6; p <= 6; ++p)
                for (int q = 0; q <= 6; ++q) {
                    if ((q == 0 && p != 1) || (p == 0 && q != 1)) continue;
                    if (q > 0 && p != 0 && std::gcd(std::abs(p), q) != 1) continue;
                    Slope slope = Slope::make(p, q);
                    double ls = rep.closedLength(slope);
                    double anchor = selfArcLength(PantsStructure(x.boundaryLength, ls, ls), 1);
                    worst = std::max(worst, std::fabs(rep.arcLength(slope) - anchor) / anchor);
                }
        }
        detail = "worst relative disagreement = " + fmt17(worst);
        return worst <= 1e-10;
    });

    s.check("curves.enumeration_deterministic", [&](std::string&) {
        EnumerationBudget b{7, true, true};
        return enumerate(SurfaceKind::HoledTorus, b) == enumerate(SurfaceKind::HoledTorus, b) &&
               enumerate(SurfaceKind::Pants, b) == enumerate(SurfaceKind::Pants, b);
    });

    s.check("curves.no_duplicates", [&](std::string&) {
        EnumerationBudget b{9, true, true};
        auto classes = enumerate(SurfaceKind::HoledTorus, b);
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (std::size_t j = i + 1; j < classes.size(); ++j)
                if (classes[i] == classes[j]) return false;
        return true;
    });

    s.check("curves.prefix_monotone", [&](std::string&) {
        for (int n = 1; n < 8; ++n) {
            auto small = enumerate(SurfaceKind::HoledTorus, {n, true, true});
            auto big = enumerate(SurfaceKind::HoledTorus, {n + 1, true, true});
            if (small.size() > big.size()) return false;
            for (std::size_t i = 0; i < small.size(); ++i)
                if (!(small[i] == big[i])) return false;
        }
        return true;
    });

    s.check("curves.count_primitive", [&](std::string&) {
        for (int n = 1; n <= 12; ++n) {
            std::int64_t brute = 0;
            for (int p = -n; p <= n; ++p)
                for (int q = 0; q <= n; ++q) {
                    if (q == 0 && p != 1) continue;
                    if (p == 0 && q != 1) continue;
                    if (std::gcd(std::abs(p), q) != 1) continue;
                    ++brute;
                }
            if (countPrimitive(n) != brute) return false;
            if (n > 1 && countPrimitive(n) <= countPrimitive(n - 1)) return false;
        }
        return true;
    });

    s.check("metrics.identity_zero", [&](std::string&) {
        TeichPoint x = PantsStructure(1.1, 0.9, 2.0);
        TeichPoint t = HoledTorusStructure(1.2, 0.3, 0.8);
        EnumerationBudget b{10, true, true};
        for (auto v : {MetricVariant::D, MetricVariant::DBar, MetricVariant::DeltaL,
                       MetricVariant::DL, MetricVariant::DArcsOnly})
            if (evaluateMetric(v, x, x, b).value != 0.0 || evaluateMetric(v, t, t, b).value != 0.0)
                return false;
        return true;
    });

    s.check("metrics.nonnegativity_sum", [&](std::string& detail) {
        std::mt19937_64 rng(19);
        double worst = 1e300;
        for (int i = 0; i < 10; ++i) {
            TeichPoint x = randomTorus(rng), y = randomTorus(rng);
            EnumerationBudget b{12, true, true};
            worst = std::min(worst, dWeak(x, y, b).value + dBar(x, y, b).value);
        }
        detail = "min d + dbar = " + fmt17(worst);
        return worst >= 0.0;
    });

    s.check("metrics.dbar_transpose", [&](std::string&) {
        std::mt19937_64 rng(20);
        for (int i = 0; i < 5; ++i) {
            TeichPoint x = randomTorus(rng), y = randomTorus(rng);
            EnumerationBudget b{10, true, true};
            if (dBar(x, y, b).value != dWeak(y, x, b).value) return false;
        }
        return true;
    });

    s.check("metrics.pants_eq3_exactness", [&](std::string&) {
        std::mt19937_64 rng(21);
        EnumerationBudget b{5, true, true};
        for (int i = 0; i < 20; ++i) {
            TeichPoint x = PantsStructure(uniformFromBits(rng(), 0.4, 3.0),
                                          uniformFromBits(rng(), 0.4, 3.0),
                                          uniformFromBits(rng(), 0.4, 3.0));
            TeichPoint y = PantsStructure(uniformFromBits(rng(), 0.4, 3.0),
                                          uniformFromBits(rng(), 0.4, 3.0),
                                          uniformFromBits(rng(), 0.4, 3.0));
            if (dWeak(x, y, b).value != dWeakArcsOnly(x, y, b).value) return false;
        }
        return true;
    });

    s.check("metrics.monotone_truncation", [&](std::string&) {
        TeichPoint x = HoledTorusStructure(1.0, 0.2, 1.0);
        TeichPoint y = HoledTorusStructure(1.4, -0.3, 0.7);
        double prev = -1e300;
        for (int n : {10, 20, 30, 40, 50}) {
            double v = dWeak(x, y, {n, true, true}).value;
            if (v < prev) return false;
            prev = v;
        }
        return true;
    });

    s.check("metrics.dl_le_deltal", [&](std::string&) {
        std::mt19937_64 rng(22);
        for (int i = 0; i < 10; ++i) {
            TeichPoint x = randomTorus(rng), y = randomTorus(rng);
            EnumerationBudget b{10, true, true};
            if (dL(x, y, b).value > deltaL(x, y, b).value) return false;
        }
        return true;
    });

    s.check("extremal.maskit_bounds", [&](std::string&) {
        for (double l = 0.1; l <= 8.0; l += 0.1) {
            ExtremalBoundPair bp = maskitBounds(l);
            if (!(bp.lower < bp.upper)) return false;
            if (l >= 0.2) { // strict monotonicity on the grid
                ExtremalBoundPair prev = maskitBounds(l - 0.1);
                if (!(bp.lower > prev.lower && bp.upper > prev.upper)) return false;
            }
        }
        double ratio = maskitBounds(1e-6).lower / maskitBounds(1e-6).upper;
        return std::fabs(ratio - 2.0 / std::numbers::pi) <= 1e-6;
    });

    s.check("extremal.annulus_sharpness", [&](std::string&) {
        for (double m = 0.05; m <= 20.0; m *= 1.7) {
            AnnulusCoreData c = annulusCoreData(Modulus(m));
            if (std::fabs(c.extremalLength - c.coreGeodesicLength / std::numbers::pi) > 1e-15)
                return false;
        }
        return true;
    });

    s.check("nielsen.ledger_monotone", [&](std::string&) {
        NielsenLedger led = nielsenLedger(PantsStructure(0.7, 1.0, 2.3), 20);
        for (std::size_t n = 1; n < led.stages.size(); ++n)
            for (std::size_t i = 0; i < 3; ++i) {
                if (led.stages[n].modulusLB[i] <= led.stages[n - 1].modulusLB[i]) return false;
                if (led.stages[n].lengthUB[i] > led.stages[n - 1].lengthUB[i]) return false;
                if (led.stages[n].tBarLB[i] < led.stages[n - 1].tBarLB[i]) return false;
            }
        return true;
    });

    s.check("nielsen.halving_recursion", [&](std::string&) {
        NielsenLedger led = nielsenLedger(PantsStructure(1.0, 1.0, 1.0), 13);
        for (std::size_t n = 1; n < led.stages.size(); ++n)
            if (led.stages[n].lengthUB[0] != std::ldexp(1.0, 1 - static_cast<int>(n))) return false;
        return led.stages[12].lengthUB[0] < 1e-3;
    });

    s.check("nielsen.tbar_divergence", [&](std::string&) {
        NielsenLedger led = nielsenLedger(PantsStructure(1.0, 1.0, 1.0), 40);
        int firstOver = -1;
        for (int n = 0; n < 40; ++n)
            if (led.tBarLowerBound(n) > 10.0) { firstOver = n; break; }
        return firstOver == 30;
    });

    s.check("nielsen.certificate_monotone", [&](std::string&) {
        NielsenLedger led = nielsenLedger(PantsStructure(1.0, 2.0, 0.5), 16);
        bool seen[3] = {false, false, false};
        for (int n = 0; n < 16; ++n) {
            auto cert = monotonicityCertificate(led, n);
            for (int i = 0; i < 3; ++i) {
                if (seen[i] && !cert[static_cast<std::size_t>(i)]) return false;
                seen[i] = seen[i] || cert[static_cast<std::size_t>(i)];
            }
        }
        return seen[0] && seen[1] && seen[2];
    });

    s.check("thick.membership_witness", [&](std::string&) {
        EnumerationBudget b{10, true, true};
        ThickPartSpec spec(0.5, 2.0);
        if (!isInThickPart(TeichPoint(PantsStructure(1, 1, 1)), spec, b).inThickPart) return false;
        auto bad = isInThickPart(TeichPoint(PantsStructure(0.1, 1, 1)), spec, b);
        if (bad.inThickPart || !bad.violator) return false;
        return label(*bad.violator) == "boundary:1";
    });

    s.check("sweep.deterministic_bytes", [&](std::string&) {
        SweepConfig cfg;
        cfg.kind = SurfaceKind::Pants;
        cfg.samples = 4;
        cfg.seed = 99;
        cfg.boxLo = {0.8, 0.8, 0.8};
        cfg.boxHi = {1.9, 1.9, 1.9};
        cfg.budget = {5, true, true};
        cfg.thick = ThickPartSpec(0.5, 2.0);
        std::ostringstream a, b;
        writeSweepCsv(runSweep(cfg), a);
        cfg.policy.threads = 3;
        writeSweepCsv(runSweep(cfg), b);
        return !a.str().empty() && a.str() == b.str();
    });

    s.check("sweep.record_consistency", [&](std::string&) {
        SweepConfig cfg;
        cfg.kind = SurfaceKind::HoledTorus;
        cfg.samples = 3;
        cfg.seed = 5;
        cfg.boxLo = {0.7, -0.5, 0.7};
        cfg.boxHi = {1.6, 0.5, 1.8};
        cfg.budget = {8, true, true};
        cfg.thick = ThickPartSpec(0.5, 2.0);
        for (const auto& r : runSweep(cfg)) {
            if (r.deltaL != std::max(r.d, r.dBar)) return false;
            if (r.wolpertLB != r.deltaL / 2.0) return false;
        }
        return true;
    });

    return s.results;
}

} // namespace teich
