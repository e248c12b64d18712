#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "teich/curves.hpp"

#ifndef TEICH_CLI_PATH
#error "TEICH_CLI_PATH must be defined by the build"
#endif

namespace {

struct RunResult {
    int exitCode = -1;
    std::string out;
};

RunResult runCli(const std::string& args) {
    std::string cmd = std::string(TEICH_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int status = pclose(pipe);
    r.exitCode = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("length: pants arc and torus generator") {
    auto pants = runCli("length --surface pants --cuffs 1,1,1 --class between:1,2");
    CHECK(pants.exitCode == 0);
    CHECK(std::stod(pants.out) == doctest::Approx(2.8687).epsilon(1e-4));

    auto torus = runCli("length --surface torus --fn 1.0,0.0,1.0 --class slope:1,0");
    CHECK(torus.exitCode == 0);
    CHECK(std::stod(torus.out) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("length: malformed input exits 2") {
    CHECK(runCli("length --surface pants --cuffs 1,1,1 --class nonsense").exitCode == 2);
    CHECK(runCli("length --surface pants --cuffs 1,1 --class between:1,2").exitCode == 2);
    CHECK(runCli("length --surface torus --fn 1,0,1 --class slope:2,4").exitCode == 2);
    CHECK(runCli("length --surface pants --cuffs 0,1,1 --class between:1,2").exitCode == 2);
}

TEST_CASE("spectrum: csv output with one row per class") {
    auto res = runCli("spectrum --surface torus --fn 1.0,0.2,1.0 --budget 3 --format csv");
    CHECK(res.exitCode == 0);
    std::istringstream is(res.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "class,length");
    int rows = 0;
    while (std::getline(is, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 1 + 2 * static_cast<int>(teich::countPrimitive(3)));
}

TEST_CASE("metric: known value, identity, monotone budgets") {
    auto res = runCli("metric --surface pants --x 1,1,1 --y 2,2,2 --variant deltal");
    CHECK(res.exitCode == 0);
    auto j = nlohmann::json::parse(res.out);
    CHECK(j["variant"] == "deltal");
    CHECK(j["value"].get<double>() == doctest::Approx(0.693147).epsilon(1e-6));
    CHECK(j["maximizer"] == "boundary:1");

    for (std::string v : {"d", "dbar", "deltal", "dl", "arcs-only"}) {
        auto id = runCli("metric --surface torus --x 1,0.2,1 --y 1,0.2,1 --variant " + v);
        CHECK(id.exitCode == 0);
        CHECK(nlohmann::json::parse(id.out)["value"].get<double>() == 0.0);
    }

    auto n20 = runCli("metric --surface torus --x 1,0.1,1 --y 1.4,-0.2,0.9 --variant d --budget 20");
    auto n50 = runCli("metric --surface torus --x 1,0.1,1 --y 1.4,-0.2,0.9 --variant d --budget 50");
    double v20 = nlohmann::json::parse(n20.out)["value"].get<double>();
    double v50 = nlohmann::json::parse(n50.out)["value"].get<double>();
    CHECK(v50 >= v20);

    CHECK(runCli("metric --surface pants --x 1,1,1 --y 2,2,2 --variant bogus").exitCode == 2);
}

TEST_CASE("nielsen: ledger csv with halving column, validation") {
    auto res = runCli("nielsen --cuffs 1,1,1 --stages 6");
    CHECK(res.exitCode == 0);
    std::istringstream is(res.out);
    std::string line;
    std::getline(is, line);
    CHECK(line == "stage,boundary_index,modulus_lb,length_ub,tbar_lb");
    std::vector<double> u1;
    double prevTbar = -1e300;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string stage, bi, m, u, t;
        std::getline(row, stage, ',');
        std::getline(row, bi, ',');
        std::getline(row, m, ',');
        std::getline(row, u, ',');
        std::getline(row, t, ',');
        if (bi == "1") {
            u1.push_back(std::stod(u));
            double tv = t == "-inf" ? -1e300 : std::stod(t);
            CHECK(tv >= prevTbar);
            prevTbar = tv;
        }
    }
    std::vector<double> want = {1.0, 1.0, 0.5, 0.25, 0.125, 0.0625};
    CHECK(u1 == want);

    CHECK(runCli("nielsen --cuffs 1,1,1 --stages 0").exitCode == 2);
}

TEST_CASE("sweep: byte-identical files across runs and thread counts") {
    std::string base = "sweep --surface pants --samples 6 --seed 42 --budget 8 "
                       "--epsilon 0.5 --epsilon0 2.0";
    CHECK(runCli(base + " --threads 1 --out cli_sweep_a.csv").exitCode == 0);
    CHECK(runCli(base + " --threads 1 --out cli_sweep_b.csv").exitCode == 0);
    CHECK(runCli(base + " --threads 4 --out cli_sweep_c.csv").exitCode == 0);
    std::string a = slurp("cli_sweep_a.csv");
    CHECK(a == slurp("cli_sweep_b.csv"));
    CHECK(a == slurp("cli_sweep_c.csv"));
    CHECK(a.find("sample_id,x_coords,y_coords,d,d_bar,delta_l,d_l,wolpert_lb,kerckhoff_lb,gap,"
                 "stability_gap,maximizer_d,maximizer_dbar") == 0);
}

TEST_CASE("sweep: config file with explicit points, flag overrides") {
    {
        std::ofstream cfg("cli_sweep_cfg.json");
        cfg << R"({"surface":"pants","points":[[1,1,1],[2,2,2]],)"
            << R"("budget":{"maxDenominator":6},"thick":{"epsilon":0.4,"epsilon0":2.5},)"
            << R"("variants":["d","deltal"],"output":"cli_sweep_cfg.csv"})";
    }
    CHECK(runCli("sweep --config cli_sweep_cfg.json").exitCode == 0);
    std::string csv = slurp("cli_sweep_cfg.csv");
    // the (X, Y) = ((1,1,1), (2,2,2)) row carries the finite-oracle values
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    bool found = false;
    while (std::getline(is, line)) {
        if (line.rfind("1,", 0) != 0) continue; // sample_id 1 is the (0,1) pair
        std::istringstream row(line);
        std::string f;
        std::vector<std::string> fields;
        while (std::getline(row, f, ',')) fields.push_back(f);
        REQUIRE(fields.size() >= 12);
        CHECK(std::stod(fields[3]) == doctest::Approx(std::log(2.0)).epsilon(1e-12));  // d
        CHECK(std::stod(fields[5]) == doctest::Approx(std::log(2.0)).epsilon(1e-12));  // delta_l
        CHECK(std::stod(fields[7]) == doctest::Approx(std::log(2.0) / 2).epsilon(1e-12));
        found = true;
    }
    CHECK(found);
}

TEST_CASE("sweep: empty thick-part sample exits 2") {
    CHECK(runCli("sweep --surface pants --samples 5 --seed 7 --budget 5 "
                 "--epsilon 5 --epsilon0 5").exitCode == 2);
}

TEST_CASE("verify: green suite, negative control, complete manifest") {
    auto ok = runCli("verify");
    CHECK(ok.exitCode == 0);
    auto j = nlohmann::json::parse(ok.out);
    CHECK(j["failed"] == 0);
    std::set<std::string> names;
    for (const auto& inv : j["invariants"]) names.insert(inv["name"].get<std::string>());
    CHECK(names.size() == j["invariants"].size()); // every invariant listed exactly once
    CHECK(names.size() == j["total"].get<std::size_t>());

    auto bad = runCli("verify --inject-failure");
    CHECK(bad.exitCode == 1);
    auto jb = nlohmann::json::parse(bad.out);
    CHECK(jb["failed"].get<int>() >= 1);
}

} // TEST_SUITE
