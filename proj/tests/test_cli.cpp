// End-to-end tests for the command-line front end.  The binary under test is
// located through the RELSR_CLI environment variable; outputs are parsed as
// JSON and checked against library oracles and frozen values.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "fixtures.hpp"
#include "json.hpp"
#include "relsr/bounds.hpp"

using nlohmann::json;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string cli_path() {
    const char* p = std::getenv("RELSR_CLI");
    REQUIRE_MESSAGE(p != nullptr, "RELSR_CLI must point at the CLI binary");
    return p;
}

RunResult run(const std::string& args) {
    const std::string cmd = cli_path() + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = std::string("cli_input_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

std::string rp2_json() {
    const relsr::SimplicialComplex rp2 = relsr::fixtures::rp2_6();
    json facets = json::array();
    for (const auto& f : rp2.facets()) facets.push_back(f);
    return json{{"facets", facets}}.dump();
}

}  // namespace

TEST_CASE("complex-stats reports f/h/g/chi of a path complex") {
    // [TRIVIAL]: f/h of the path 1-2-3
    const std::string path = write_temp("path.json", R"({"facets":[[1,2],[2,3]]})");
    RunResult r = run("complex-stats " + path);
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["f"] == json({1, 3, 2}));
    CHECK(rep["h"] == json({1, 1, 0}));
    CHECK(rep["chi"] == 0);
    CHECK(rep["schema"] == "relsr-report/1");
}

TEST_CASE("schenzel frozen output on the projective plane over GF(2)") {
    // [DERIVED: module outputs] frozen h / h_alg / h_top triple
    const std::string path = write_temp("rp2.json", rp2_json());
    RunResult r = run("schenzel " + path + " --field f2 --seed 7");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["h"] == json({1, 3, 6, 0}));
    CHECK(rep["h_alg"] == json({1, 3, 6, 1}));
    CHECK(rep["h_top"] == json({0, 0, 0, -1}));
    CHECK(rep["ok"] == true);
    CHECK(rep["seed"] == 7);

    SUBCASE("byte-identical on repeated runs") {
        RunResult again = run("schenzel " + path + " --field f2 --seed 7");
        CHECK(again.exit_code == 0);
        CHECK(again.out == r.out);
    }
}

TEST_CASE("bound nu-table nb_f matches the parallelepiped zonotope") {
    // [DERIVED: oracle] 3 generic segments in R^3 span a parallelepiped
    RunResult r = run("bound --mode nu -d 3 --alpha 2,2,2");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["nb_f"] == json({8, 12, 6}));
    CHECK(rep["mode"] == "nu");

    SUBCASE("agrees with the library") {
        const std::vector<relsr::i64> oracle = relsr::nb_f_bound({2, 2, 2}, 3);
        CHECK(rep["nb_f"].get<std::vector<relsr::i64>>() == oracle);
    }
}

TEST_CASE("complex-check flags the bowtie as non-Cohen-Macaulay") {
    // [DERIVED]: Reisner criterion fails at the pinch vertex
    const std::string path = write_temp("bowtie.json", R"({"facets":[[1,2,3],[3,4,5]]})");
    RunResult r = run("complex-check " + path + " --field q");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["cohen_macaulay"] == false);
    CHECK(rep["pure"] == true);
}

TEST_CASE("polytope-cyclic reproduces the cyclic h-vector") {
    // [DERIVED]: h_k(Cyc_4(8)) = C(3+k, k) up to the middle, palindromic
    RunResult r = run("polytope-cyclic -d 4 -n 8");
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["h"] == json({1, 4, 10, 4, 1}));
    CHECK(rep["f"] == json({8, 28, 40, 20}));
}

TEST_CASE("mink-verify passes on two generic triangles") {
    // [DERIVED: full pipeline]
    const std::string path = write_temp(
        "tri2.json",
        R"({"d":2,"members":[{"dim":2,"vertices":[["0","0"],["7","1"],["2","9"]]},)"
        R"({"dim":2,"vertices":[["1","0"],["-6","3"],["3","-8"]]}]})");
    RunResult r = run("mink-verify " + path);
    CHECK(r.exit_code == 0);
    json rep = json::parse(r.out);
    CHECK(rep["all_pass"] == true);
    CHECK(rep["m"] == 2);
}

TEST_CASE("exit codes: 2 on malformed input and bad usage") {
    // [TRIVIAL]
    const std::string path = write_temp("garbage.json", "not json at all");
    CHECK(run("complex-stats " + path).exit_code == 2);
    CHECK(run("complex-stats /nonexistent/file.json").exit_code == 2);
    CHECK(run("no-such-verb").exit_code == 2);
    const std::string bad = write_temp("bad_schema.json", R"({"cells":[[1,2]]})");
    CHECK(run("complex-stats " + bad).exit_code == 2);
    CHECK(run("bound --mode mubt -d 3 --alpha 2,2").exit_code == 2);
}
