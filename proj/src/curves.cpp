#include "teich/curves.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace teich {

std::string to_string(SurfaceKind kind) {
    return kind == SurfaceKind::Pants ? "pants" : "torus";
}

SurfaceKind parseSurfaceKind(const std::string& s) {
    if (s == "pants") return SurfaceKind::Pants;
    if (s == "torus") return SurfaceKind::HoledTorus;
    throw InvalidArgumentError("unknown surface kind '" + s + "' (expected pants|torus)");
}

Slope Slope::make(int p, int q) {
    if (p == 0 && q == 0)
        throw InvalidArgumentError("Slope: (0,0) is not a slope");
    if (q < 0 || (q == 0 && p < 0)) { p = -p; q = -q; }
    if (std::gcd(std::abs(p), std::abs(q)) != 1)
        throw InvalidArgumentError("Slope: (" + std::to_string(p) + "," + std::to_string(q) +
                                   ") is not primitive");
    return Slope{p, q};
}

int Slope::shell() const { return std::max(std::abs(p), std::abs(q)); }

PantsArcClass PantsArcClass::between(int i, int j) {
    if (i < 1 || j > 3 || i >= j)
        throw IndexOutOfRangeError("PantsArcClass::between: need 1 <= i < j <= 3");
    return {Kind::Between, i, j};
}

PantsArcClass PantsArcClass::selfArc(int i) {
    if (i < 1 || i > 3)
        throw IndexOutOfRangeError("PantsArcClass::selfArc: need 1 <= i <= 3");
    return {Kind::Self, i, i};
}

bool isClosedClass(const CurveClass& c) {
    return std::holds_alternative<PantsBoundary>(c) || std::holds_alternative<TorusBoundary>(c) ||
           std::holds_alternative<TorusCurve>(c);
}

bool isArcOrBoundaryClass(const CurveClass& c) {
    return !std::holds_alternative<TorusCurve>(c);
}

SurfaceKind surfaceOf(const CurveClass& c) {
    if (std::holds_alternative<PantsBoundary>(c) || std::holds_alternative<PantsArc>(c))
        return SurfaceKind::Pants;
    return SurfaceKind::HoledTorus;
}

int shellOf(const CurveClass& c) {
    if (const auto* tc = std::get_if<TorusCurve>(&c)) return tc->slope.shell();
    if (const auto* ta = std::get_if<TorusArc>(&c)) return ta->slope.shell();
    return 0;
}

std::string label(const CurveClass& c) {
    struct V {
        std::string operator()(const PantsBoundary& b) const {
            return "boundary:" + std::to_string(b.index);
        }
        std::string operator()(const PantsArc& a) const {
            if (a.arc.kind == PantsArcClass::Kind::Self)
                return "self:" + std::to_string(a.arc.i);
            return "between:" + std::to_string(a.arc.i) + "," + std::to_string(a.arc.j);
        }
        std::string operator()(const TorusBoundary&) const { return "boundary"; }
        std::string operator()(const TorusCurve& t) const {
            return "slope:" + std::to_string(t.slope.p) + "," + std::to_string(t.slope.q);
        }
        std::string operator()(const TorusArc& t) const {
            return "arc:" + std::to_string(t.slope.p) + "," + std::to_string(t.slope.q);
        }
    };
    return std::visit(V{}, c);
}

namespace {

int parseInt(std::string_view s) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw InvalidArgumentError("malformed integer in class label");
    return v;
}

std::pair<int, int> parseIntPair(std::string_view s) {
    auto comma = s.find(',');
    if (comma == std::string_view::npos)
        throw InvalidArgumentError("class label needs 'p,q'");
    return {parseInt(s.substr(0, comma)), parseInt(s.substr(comma + 1))};
}

} // namespace

CurveClass parseClassLabel(SurfaceKind kind, const std::string& text) {
    std::string_view s{text};
    auto colon = s.find(':');
    std::string_view head = s.substr(0, colon);
    std::string_view rest = colon == std::string_view::npos ? std::string_view{} : s.substr(colon + 1);

    if (kind == SurfaceKind::Pants) {
        if (head == "boundary") {
            int i = parseInt(rest);
            if (i < 1 || i > 3) throw IndexOutOfRangeError("boundary index must be 1..3");
            return PantsBoundary{i};
        }
        if (head == "between") {
            auto [i, j] = parseIntPair(rest);
            if (i > j) std::swap(i, j);
            return PantsArc{PantsArcClass::between(i, j)};
        }
        if (head == "self") return PantsArc{PantsArcClass::selfArc(parseInt(rest))};
        throw InvalidArgumentError("pants class label must be boundary:i, between:i,j or self:i");
    }
    if (head == "boundary") {
        if (!rest.empty()) throw InvalidArgumentError("torus boundary label takes no index");
        return TorusBoundary{};
    }
    if (head == "slope") {
        auto [p, q] = parseIntPair(rest);
        return TorusCurve{Slope::make(p, q)};
    }
    if (head == "arc") {
        auto [p, q] = parseIntPair(rest);
        return TorusArc{Slope::make(p, q)};
    }
    throw InvalidArgumentError("torus class label must be boundary, slope:p,q or arc:p,q");
}

namespace {

// Normalized primitive slopes with max(|p|,|q|) == shell, sorted by (p, q).
std::vector<Slope> slopesOnShell(int shell) {
    std::vector<Slope> out;
    if (shell == 1) {
        out.push_back(Slope{-1, 1});
        out.push_back(Slope{0, 1});
        out.push_back(Slope{1, 0});
        out.push_back(Slope{1, 1});
        return out;
    }
    for (int p = -shell; p <= shell; ++p) {
        for (int q = 1; q <= shell; ++q) {
            if (std::max(std::abs(p), q) != shell) continue;
            if (std::gcd(std::abs(p), q) != 1) continue;
            out.push_back(Slope{p, q});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<CurveClass> enumerate(SurfaceKind kind, const EnumerationBudget& budget) {
    budget.validate();
    std::vector<CurveClass> out;
    if (kind == SurfaceKind::Pants) {
        if (budget.includeBoundary)
            for (int i = 1; i <= 3; ++i) out.push_back(PantsBoundary{i});
        if (budget.includeArcs) {
            out.push_back(PantsArc{PantsArcClass::between(1, 2)});
            out.push_back(PantsArc{PantsArcClass::between(1, 3)});
            out.push_back(PantsArc{PantsArcClass::between(2, 3)});
            for (int i = 1; i <= 3; ++i) out.push_back(PantsArc{PantsArcClass::selfArc(i)});
        }
        return out;
    }
    if (budget.includeBoundary) out.push_back(TorusBoundary{});
    for (int shell = 1; shell <= budget.maxDenominator; ++shell) {
        auto slopes = slopesOnShell(shell);
        for (const Slope& s : slopes) out.push_back(TorusCurve{s});
        if (budget.includeArcs)
            for (const Slope& s : slopes) out.push_back(TorusArc{s});
    }
    return out;
}

std::int64_t countPrimitive(int n) {
    if (n < 1) throw InvalidArgumentError("countPrimitive: n must be >= 1");
    // (1,0) plus, for each q in [1,n], the p in [-n,n] coprime to q.
    // p = 0 contributes only for q = 1.
    std::int64_t total = 1;
    for (int q = 1; q <= n; ++q) {
        if (q == 1) {
            total += 2 * static_cast<std::int64_t>(n) + 1;
            continue;
        }
        // count of p in [1, n] coprime to q, by inclusion-exclusion over
        // the distinct prime factors of q
        int rem = q;
        int primes[10];
        int np = 0;
        for (int f = 2; f * f <= rem; ++f) {
            if (rem % f == 0) {
                primes[np++] = f;
                while (rem % f == 0) rem /= f;
            }
        }
        if (rem > 1) primes[np++] = rem;
        std::int64_t cnt = 0;
        for (int mask = 0; mask < (1 << np); ++mask) {
            std::int64_t div = 1;
            int bits = 0;
            for (int k = 0; k < np; ++k)
                if (mask & (1 << k)) { div *= primes[k]; ++bits; }
            cnt += (bits % 2 == 0 ? 1 : -1) * (n / div);
        }
        total += 2 * cnt;
    }
    return total;
}

} // namespace teich
