// Command-line harness for the length-spectrum toolkit.
//
// Subcommands:
//   length   -- geodesic length of one class on one structure
//   spectrum -- lengths of all enumerated classes (CSV or JSON)
//   metric   -- truncated metric / weak-metric evaluation (JSON report)
//   nielsen  -- certified Nielsen-extension ledger for a pants (CSV)
//   sweep    -- thick-part comparison sweep (CSV dataset)
//   verify   -- run the module invariant suite (JSON summary)
//
// Exit codes: 0 success, 1 verification failure, 2 input validation failure.
//
// Every subcommand accepts --config file.json; flags override file values.
// Recognized config keys:
//   surface, coordinates [a,b,c], x, y, class, variant, stages,
//   budget {maxDenominator, includeArcs, includeBoundary},
//   thick {epsilon, epsilonZero}, seed, samples, box {lo, hi}, points,
//   variants, output, format, threads
//
// Numeric CSV output uses fixed 17-significant-digit scientific notation so
// files are byte-comparable across runs and worker counts.

#include <array>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "teich/csvio.hpp"
#include "teich/metrics.hpp"
#include "teich/verify.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string configPath;
    std::optional<std::string> surface;
    std::optional<std::string> cuffs; // "a,b,c"
    std::optional<std::string> fn;    // "l,tau,L"
    std::optional<std::string> classLabel;
    std::optional<std::string> variant;
    std::optional<std::string> xCoords, yCoords;
    std::optional<int> budgetN;
    std::optional<bool> arcs, boundary;
    std::optional<int> stages;
    std::optional<std::uint64_t> seed;
    std::optional<int> samples;
    std::optional<double> epsilon, epsilonZero;
    std::optional<std::string> outPath;
    std::optional<std::string> format;
    std::optional<int> threads;
    bool injectFailure = false;

    // sweep-only, config-file values
    std::vector<std::array<double, 3>> points;
    std::optional<std::array<double, 3>> boxLo, boxHi;
};

std::array<double, 3> parseTriple(const std::string& text, const std::string& what) {
    std::array<double, 3> out{};
    std::stringstream ss(text);
    std::string item;
    int n = 0;
    while (std::getline(ss, item, ',')) {
        if (n >= 3)
            throw teich::InvalidArgumentError(what + ": expected three comma-separated numbers");
        try {
            std::size_t pos = 0;
            out[static_cast<std::size_t>(n++)] = std::stod(item, &pos);
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw teich::InvalidArgumentError(what + ": malformed number '" + item + "'");
        }
    }
    if (n != 3) throw teich::InvalidArgumentError(what + ": expected three comma-separated numbers");
    return out;
}

std::array<double, 3> tripleFromJson(const json& j, const std::string& what) {
    if (!j.is_array() || j.size() != 3)
        throw teich::InvalidArgumentError(what + ": expected an array of three numbers");
    return {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

std::string joinTriple(const std::array<double, 3>& c) {
    std::ostringstream os;
    os.precision(17);
    os << c[0] << "," << c[1] << "," << c[2];
    return os.str();
}

// Config values fill whatever the flags left unset.
void mergeConfig(Options& o) {
    if (o.configPath.empty()) return;
    std::ifstream in(o.configPath);
    if (!in) throw teich::InvalidArgumentError("cannot open config file '" + o.configPath + "'");
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw teich::InvalidArgumentError(std::string("config parse error: ") + e.what());
    }

    auto fill = [&](auto& slot, const char* key) {
        using T = typename std::decay_t<decltype(slot)>::value_type;
        if (!slot && j.contains(key)) slot = j.at(key).get<T>();
    };
    fill(o.surface, "surface");
    fill(o.classLabel, "class");
    fill(o.variant, "variant");
    fill(o.stages, "stages");
    fill(o.seed, "seed");
    fill(o.samples, "samples");
    fill(o.outPath, "output");
    fill(o.format, "format");
    fill(o.threads, "threads");
    if (!o.cuffs && !o.fn && j.contains("coordinates")) {
        std::string triple = joinTriple(tripleFromJson(j["coordinates"], "coordinates"));
        // routed to pants or torus once the surface kind is known
        if (o.surface && *o.surface == "torus")
            o.fn = triple;
        else
            o.cuffs = triple;
    }
    if (!o.xCoords && j.contains("x")) o.xCoords = joinTriple(tripleFromJson(j["x"], "x"));
    if (!o.yCoords && j.contains("y")) o.yCoords = joinTriple(tripleFromJson(j["y"], "y"));
    if (j.contains("budget")) {
        const json& b = j["budget"];
        if (!o.budgetN && b.contains("maxDenominator")) o.budgetN = b["maxDenominator"].get<int>();
        if (!o.arcs && b.contains("includeArcs")) o.arcs = b["includeArcs"].get<bool>();
        if (!o.boundary && b.contains("includeBoundary"))
            o.boundary = b["includeBoundary"].get<bool>();
    }
    if (j.contains("thick")) {
        const json& t = j["thick"];
        if (!o.epsilon && t.contains("epsilon")) o.epsilon = t["epsilon"].get<double>();
        if (!o.epsilonZero) {
            if (t.contains("epsilonZero")) o.epsilonZero = t["epsilonZero"].get<double>();
            else if (t.contains("epsilon0")) o.epsilonZero = t["epsilon0"].get<double>();
        }
    }
    if (j.contains("points"))
        for (const auto& p : j["points"]) o.points.push_back(tripleFromJson(p, "points"));
    if (j.contains("box")) {
        o.boxLo = tripleFromJson(j["box"].at("lo"), "box.lo");
        o.boxHi = tripleFromJson(j["box"].at("hi"), "box.hi");
    }
    if (j.contains("variants"))
        for (const auto& v : j["variants"]) teich::parseMetricVariant(v.get<std::string>());
}

teich::TeichPoint pointFromOpts(const Options& o) {
    if (o.cuffs && o.fn)
        throw teich::InvalidArgumentError("give either --cuffs or --fn, not both");
    if (o.cuffs) {
        if (o.surface && teich::parseSurfaceKind(*o.surface) != teich::SurfaceKind::Pants)
            throw teich::InvalidArgumentError("--cuffs requires --surface pants");
        return teich::PantsStructure(parseTriple(*o.cuffs, "--cuffs"));
    }
    if (o.fn) {
        if (o.surface && teich::parseSurfaceKind(*o.surface) != teich::SurfaceKind::HoledTorus)
            throw teich::InvalidArgumentError("--fn requires --surface torus");
        auto c = parseTriple(*o.fn, "--fn");
        return teich::HoledTorusStructure(c[0], c[1], c[2]);
    }
    throw teich::InvalidArgumentError("missing coordinates (--cuffs a,b,c or --fn l,tau,L)");
}

teich::SurfaceKind kindFromOpts(const Options& o) {
    if (o.surface) return teich::parseSurfaceKind(*o.surface);
    if (o.cuffs) return teich::SurfaceKind::Pants;
    if (o.fn) return teich::SurfaceKind::HoledTorus;
    throw teich::InvalidArgumentError("missing --surface");
}

void writeOut(const Options& o, const std::string& text) {
    if (!o.outPath || o.outPath->empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(*o.outPath, std::ios::binary);
    if (!out) throw teich::InvalidArgumentError("cannot open output file '" + *o.outPath + "'");
    out << text;
}

json budgetToJson(const teich::EnumerationBudget& b) {
    return json{{"maxDenominator", b.maxDenominator},
                {"includeArcs", b.includeArcs},
                {"includeBoundary", b.includeBoundary}};
}

int cmdLength(const Options& o) {
    if (!o.classLabel) throw teich::InvalidArgumentError("length: missing --class");
    teich::TeichPoint x = pointFromOpts(o);
    teich::CurveClass c = teich::parseClassLabel(teich::surfaceKindOf(x), *o.classLabel);
    double len = teich::classLength(x, c);
    if (o.format.value_or("csv") == "json") {
        json j{{"class", teich::label(c)}, {"length", len}};
        writeOut(o, j.dump(2) + "\n");
    } else {
        writeOut(o, teich::fmt17(len) + "\n");
    }
    return 0;
}

int cmdSpectrum(const Options& o) {
    teich::TeichPoint x = pointFromOpts(o);
    teich::EnumerationBudget budget{o.budgetN.value_or(20), o.arcs.value_or(true),
                                    o.boundary.value_or(true)};
    auto spec = teich::lengthSpectrum(x, budget, {o.threads.value_or(0)});
    if (o.format.value_or("csv") == "json") {
        json rows = json::array();
        for (const auto& e : spec)
            rows.push_back({{"class", teich::label(e.curveClass)}, {"length", e.length}});
        json j{{"surface", teich::to_string(teich::surfaceKindOf(x))},
               {"budget", budgetToJson(budget)},
               {"spectrum", rows}};
        writeOut(o, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        teich::writeSpectrumCsv(spec, os);
        writeOut(o, os.str());
    }
    return 0;
}

int cmdMetric(const Options& o) {
    if (!o.xCoords || !o.yCoords)
        throw teich::InvalidArgumentError("metric: missing --x and --y coordinates");
    teich::SurfaceKind kind = kindFromOpts(o);
    teich::TeichPoint x = teich::makePoint(kind, parseTriple(*o.xCoords, "--x"));
    teich::TeichPoint y = teich::makePoint(kind, parseTriple(*o.yCoords, "--y"));
    teich::EnumerationBudget budget{o.budgetN.value_or(20), true, true};
    teich::MetricReport rep =
        teich::evaluateMetric(teich::parseMetricVariant(o.variant.value_or("deltal")), x, y,
                              budget, {o.threads.value_or(0)});
    json j{{"variant", teich::to_string(rep.variant)},
           {"value", rep.value},
           {"maximizer", teich::label(rep.maximizer)},
           {"budget", budgetToJson(rep.budgetUsed)},
           {"stabilityGap", rep.stabilityGap}};
    writeOut(o, j.dump(2) + "\n");
    return 0;
}

int cmdNielsen(const Options& o) {
    if (!o.cuffs) throw teich::InvalidArgumentError("nielsen: missing --cuffs a,b,c");
    teich::PantsStructure x(parseTriple(*o.cuffs, "--cuffs"));
    teich::NielsenLedger ledger = teich::nielsenLedger(x, o.stages.value_or(1));
    std::ostringstream os;
    teich::writeNielsenCsv(ledger, os);
    writeOut(o, os.str());
    return 0;
}

int cmdSweep(const Options& o) {
    teich::SweepConfig cfg;
    if (!o.surface) throw teich::InvalidArgumentError("sweep: missing --surface (or config key)");
    cfg.kind = teich::parseSurfaceKind(*o.surface);
    cfg.points = o.points;
    if (o.boxLo) cfg.boxLo = *o.boxLo;
    if (o.boxHi) cfg.boxHi = *o.boxHi;
    if (o.samples) cfg.samples = *o.samples;
    if (o.seed) cfg.seed = *o.seed;
    if (o.budgetN) cfg.budget.maxDenominator = *o.budgetN;
    cfg.thick = teich::ThickPartSpec(o.epsilon.value_or(0.5), o.epsilonZero.value_or(2.0));
    cfg.policy.threads = o.threads.value_or(0);
    auto records = teich::runSweep(cfg);
    std::ostringstream os;
    teich::writeSweepCsv(records, os);
    writeOut(o, os.str());
    return 0;
}

int cmdVerify(const Options& o) {
    auto results = teich::runInvariantSuite(o.injectFailure);
    int failed = 0;
    json rows = json::array();
    for (const auto& r : results) {
        if (!r.pass) ++failed;
        rows.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    }
    json j{{"invariants", rows},
           {"total", results.size()},
           {"failed", failed},
           {"pass", failed == 0}};
    writeOut(o, j.dump(2) + "\n");
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"length-spectrum metrics and extremal-length bounds for small bordered surfaces"};
    app.require_subcommand(1);

    Options o;

    auto addCommon = [&](CLI::App* cmd, bool withCoords = true) {
        cmd->add_option("--surface", o.surface, "surface kind: pants|torus");
        if (withCoords) {
            cmd->add_option("--cuffs", o.cuffs, "pants cuff lengths a,b,c");
            cmd->add_option("--fn", o.fn, "torus Fenchel-Nielsen coordinates l,tau,L");
        }
        cmd->add_option("--budget", o.budgetN, "slope budget: max(|p|,|q|) <= N (default 20)");
        cmd->add_option("--out", o.outPath, "output file (default stdout)");
        cmd->add_option("--format", o.format, "output format: csv|json");
        cmd->add_option("--threads", o.threads, "worker count (0 = all)");
        cmd->add_option("--config", o.configPath, "JSON config file (flags take precedence)");
    };

    CLI::App* length = app.add_subcommand("length", "length of one class");
    addCommon(length);
    length->add_option("--class", o.classLabel, "class label, e.g. between:1,2 or slope:1,0");

    CLI::App* spectrum = app.add_subcommand("spectrum", "length spectrum under a budget");
    addCommon(spectrum);
    spectrum->add_option("--arcs", o.arcs, "include arc classes (default true)");
    spectrum->add_option("--boundary", o.boundary, "include boundary classes (default true)");

    CLI::App* metric = app.add_subcommand("metric", "metric / weak-metric report");
    addCommon(metric, false);
    metric->add_option("--variant", o.variant, "d|dbar|deltal|dl|arcs-only (default deltal)");
    metric->add_option("--x", o.xCoords, "coordinates of X (a,b,c or l,tau,L)");
    metric->add_option("--y", o.yCoords, "coordinates of Y");

    CLI::App* nielsen = app.add_subcommand("nielsen", "Nielsen-extension ledger (pants)");
    addCommon(nielsen);
    nielsen->add_option("--stages", o.stages, "number of stages (>= 1)");

    CLI::App* sweep = app.add_subcommand("sweep", "thick-part comparison sweep");
    addCommon(sweep, false);
    sweep->add_option("--seed", o.seed, "sampler seed");
    sweep->add_option("--samples", o.samples, "sample count");
    sweep->add_option("--epsilon", o.epsilon, "thick-part epsilon");
    sweep->add_option("--epsilon0", o.epsilonZero, "thick-part epsilon0");

    CLI::App* verify = app.add_subcommand("verify", "run the invariant suite");
    addCommon(verify, false);
    verify->add_flag("--inject-failure", o.injectFailure,
                     "negative-control hook: force one invariant to fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        mergeConfig(o);
        if (length->parsed()) return cmdLength(o);
        if (spectrum->parsed()) return cmdSpectrum(o);
        if (metric->parsed()) return cmdMetric(o);
        if (nielsen->parsed()) return cmdNielsen(o);
        if (sweep->parsed()) return cmdSweep(o);
        if (verify->parsed()) return cmdVerify(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
