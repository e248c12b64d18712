#include "teich/spectrum.hpp"

#include <optional>

namespace teich {

SurfaceKind surfaceKindOf(const TeichPoint& x) {
    return std::holds_alternative<PantsStructure>(x) ? SurfaceKind::Pants : SurfaceKind::HoledTorus;
}

std::array<double, 3> coordsOf(const TeichPoint& x) {
    if (const auto* p = std::get_if<PantsStructure>(&x)) return p->cuffLengths;
    const auto& t = std::get<HoledTorusStructure>(x);
    return {t.cuffLength, t.twist, t.boundaryLength};
}

TeichPoint makePoint(SurfaceKind kind, const std::array<double, 3>& c) {
    if (kind == SurfaceKind::Pants) return PantsStructure(c[0], c[1], c[2]);
    return HoledTorusStructure(c[0], c[1], c[2]);
}

namespace {

double pantsClassLength(const PantsStructure& x, const CurveClass& c) {
    if (const auto* b = std::get_if<PantsBoundary>(&c)) return x.cuff(b->index);
    if (const auto* a = std::get_if<PantsArc>(&c)) return pantsArcLength(x, a->arc);
    throw SurfaceMismatchError("classLength: torus class on a pants structure");
}

double torusClassLength(const HolonomyRep& rep, const CurveClass& c) {
    if (std::holds_alternative<TorusBoundary>(c)) return rep.structure().boundaryLength;
    if (const auto* s = std::get_if<TorusCurve>(&c)) return rep.closedLength(s->slope);
    if (const auto* a = std::get_if<TorusArc>(&c)) return rep.arcLength(a->slope);
    throw SurfaceMismatchError("classLength: pants class on a torus structure");
}

} // namespace

double classLength(const TeichPoint& x, const CurveClass& c) {
    if (const auto* p = std::get_if<PantsStructure>(&x)) return pantsClassLength(*p, c);
    HolonomyRep rep = HolonomyRep::build(std::get<HoledTorusStructure>(x));
    return torusClassLength(rep, c);
}

std::vector<double> classLengths(const TeichPoint& x, const std::vector<CurveClass>& classes,
                                 const ExecPolicy& policy) {
    std::vector<double> out(classes.size());
    if (const auto* p = std::get_if<PantsStructure>(&x)) {
        const PantsStructure xp = *p;
        detail::parallelFor(classes.size(), policy,
                            [&](std::size_t i) { out[i] = pantsClassLength(xp, classes[i]); });
        return out;
    }
    const HolonomyRep rep = HolonomyRep::build(std::get<HoledTorusStructure>(x));
    detail::parallelFor(classes.size(), policy,
                        [&](std::size_t i) { out[i] = torusClassLength(rep, classes[i]); });
    return out;
}

namespace ref {

std::vector<double> classLengths(const TeichPoint& x, const std::vector<CurveClass>& classes) {
    std::vector<double> out(classes.size());
    if (const auto* p = std::get_if<PantsStructure>(&x)) {
        for (std::size_t i = 0; i < classes.size(); ++i) out[i] = pantsClassLength(*p, classes[i]);
        return out;
    }
    HolonomyRep rep = HolonomyRep::build(std::get<HoledTorusStructure>(x));
    for (std::size_t i = 0; i < classes.size(); ++i) out[i] = torusClassLength(rep, classes[i]);
    return out;
}

} // namespace ref

std::vector<SpectrumEntry> lengthSpectrum(const TeichPoint& x, const EnumerationBudget& budget,
                                          const ExecPolicy& policy) {
    std::vector<CurveClass> classes = enumerate(surfaceKindOf(x), budget);
    std::vector<double> lengths = classLengths(x, classes, policy);
    std::vector<SpectrumEntry> out;
    out.reserve(classes.size());
    for (std::size_t i = 0; i < classes.size(); ++i) out.push_back({classes[i], lengths[i]});
    return out;
}

} // namespace teich
