// Command-line front end: parse JSON inputs, dispatch to the library, emit
// versioned JSON reports.  No mathematics lives here.
//
// Exit codes: 0 success (and "bounds hold"); 1 a violated mathematical
// assertion (indicates a bug in the library or a false input claim);
// 2 input/usage errors.
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "relsr/algebra.hpp"
#include "relsr/bounds.hpp"
#include "relsr/homology.hpp"
#include "relsr/json_io.hpp"

using nlohmann::json;
using namespace relsr;

namespace {

constexpr const char* kSchema = "relsr-report/1";

// Parse errors and bad inputs exit with status 2; failed mathematical
// assertions (which the library raises as std::logic_error) exit with 1.
struct MathError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void emit(const json& report, bool pretty) {
    if (pretty)
        std::cout << report.dump(2) << "\n";
    else
        std::cout << report.dump() << "\n";
}

FieldSpec parse_field(const std::string& s) {
    try {
        return FieldSpec::parse(s);
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("bad --field: ") + e.what());
    }
}

json vec_json(const std::vector<i64>& v) { return json(v); }

json fh_json(const FHVectors& fh) {
    return json{{"f", fh.f}, {"h", fh.h}, {"g", fh.g}, {"chi", fh.chi}};
}

int cmd_complex_stats(const std::string& path, bool pretty) {
    const RelativeComplex rc = parse_relative_json(load_file(path));
    const FHVectors fh = fh_vectors(rc);
    json report = fh_json(fh);
    report["schema"] = kSchema;
    report["d"] = fh.d;
    emit(report, pretty);
    return 0;
}

int cmd_complex_check(const std::string& path, const std::string& field_str, bool pretty) {
    const RelativeComplex rc = parse_relative_json(load_file(path));
    const FieldSpec field = parse_field(field_str);
    const BettiTable bt = betti(rc, field);
    json report{{"schema", kSchema},
                {"field", field.name()},
                {"pure", rc.is_pure()},
                {"cohen_macaulay", is_cohen_macaulay(rc, field)},
                {"betti", bt.reduced_betti}};
    if (rc.is_pure())
        report["buchsbaum"] = is_buchsbaum(rc, field);
    else
        report["buchsbaum"] = nullptr;
    emit(report, pretty);
    return 0;
}

int cmd_schenzel(const std::string& path, const std::string& field_str, i64 seed,
                 bool pretty) {
    const RelativeComplex rc = parse_relative_json(load_file(path));
    const FieldSpec field = parse_field(field_str);
    SchenzelResult r;
    try {
        r = schenzel_decompose(rc, field, seed);
    } catch (const std::logic_error& e) {
        throw MathError(e.what());
    }
    bool ok = true;
    for (std::size_t k = 0; k < r.h.size(); ++k)
        if (r.h[k] != r.h_alg[k] + r.h_top[k]) ok = false;
    json report{{"schema", kSchema}, {"field", field.name()}, {"seed", seed},
                {"h", r.h},          {"h_alg", r.h_alg},      {"h_top", r.h_top},
                {"ok", ok}};
    emit(report, pretty);
    return ok ? 0 : 1;
}

int cmd_polytope_cyclic(int d, int n, bool pretty) {
    if (d < 2 || n < d + 1) throw std::invalid_argument("polytope-cyclic: need d >= 2, n > d");
    const RationalPolytope p = cyclic_polytope(d, n);
    std::vector<Face> facets;
    for (const auto& f : p.facets) facets.push_back(f.vertex_ids);
    const auto boundary = SimplicialComplex::from_facets(std::move(facets));
    const FHVectors fh = fh_vectors(RelativeComplex::absolute(boundary), d);
    json report{{"schema", kSchema}, {"d", d},      {"n", n},
                {"f", p.f_vector()}, {"h", fh.h}};
    emit(report, pretty);
    return 0;
}

int cmd_mink_sum(const std::string& path, bool pretty) {
    const PolytopeFamily fam = parse_family_json(load_file(path));
    const MinkowskiSum ms = minkowski_sum(fam);
    json report{{"schema", kSchema},
                {"d", fam.d},
                {"m", static_cast<int>(fam.members.size())},
                {"alpha", fam.vertex_counts()},
                {"f", ms.sum.f_vector()},
                {"mixed_f", mixed_faces(fam)}};
    emit(report, pretty);
    return 0;
}

int cmd_mink_verify(const std::string& path, bool pretty) {
    const PolytopeFamily fam = parse_family_json(load_file(path));
    FamilyReport rep;
    try {
        rep = verify_family(fam);
    } catch (const std::invalid_argument&) {
        throw;  // precondition violation: input error
    }
    json checks = json::array();
    for (const auto& c : rep.checks)
        checks.push_back(json{{"name", c.name},
                              {"pass", c.pass},
                              {"skipped", c.skipped},
                              {"details", c.details}});
    json report{{"schema", kSchema},
                {"m", rep.m},
                {"d", rep.d},
                {"alpha", rep.alpha},
                {"all_pass", rep.all_pass},
                {"checks", checks},
                {"tight_degrees", rep.tight_degrees},
                {"nonface_support_k0", rep.nonface_support_k0}};
    emit(report, pretty);
    return rep.all_pass ? 0 : 1;
}

int cmd_bound(const std::string& mode, int d, const std::string& alpha_str, bool pretty) {
    std::vector<i64> alpha;
    {
        std::string item;
        std::istringstream in(alpha_str);
        while (std::getline(in, item, ',')) {
            try {
                alpha.push_back(std::stoll(item));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad --alpha entry: " + item);
            }
        }
    }
    if (alpha.empty()) throw std::invalid_argument("--alpha must be a,b,c,...");
    for (i64 a : alpha)
        if (a < 1) throw std::invalid_argument("--alpha entries must be >= 1");
    if (d < 1) throw std::invalid_argument("-d must be >= 1");
    if (mode == "mubt")
        for (i64 a : alpha)
            if (a < d + 1) throw std::invalid_argument("mubt mode needs every alpha_i >= d+1");
    BoundTable table;
    try {
        table = (mode == "mubt") ? mubt_table(alpha, d) : nu_table(alpha, d);
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::logic_error& e) {
        throw MathError(e.what());
    }
    json report{{"schema", kSchema},
                {"mode", table.mode == BoundMode::mubt ? "mubt" : "nu"},
                {"alpha", table.alpha},
                {"d", d},
                {"h_bounds", table.h_bounds()},
                {"nb_f", table.nb_f()}};
    bool pure = true;
    for (i64 a : alpha)
        if (a < d + 1) pure = false;
    if (pure && alpha.size() >= 2)
        report["mixed_f"] = mixed_bounds(alpha, d).f_mix;
    else
        report["mixed_f"] = nullptr;
    emit(report, pretty);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact f/h-vector calculus for relative complexes, Cayley complexes of "
                 "Minkowski sums, and the associated upper-bound tables"};
    app.require_subcommand(1);
    app.fallthrough();  // allow --pretty after the subcommand
    bool pretty = false;
    app.add_flag("--pretty", pretty, "indent the JSON report");

    std::string path, field = "q", mode = "mubt", alpha;
    i64 seed = 0;
    int d = 0, n = 0, max_degree = -1;

    auto* stats = app.add_subcommand("complex-stats", "f/h/g-vectors of a (relative) complex");
    stats->add_option("file", path, "complex or relative-complex JSON")->required();

    auto* check = app.add_subcommand("complex-check", "homology and depth predicates");
    check->add_option("file", path)->required();
    check->add_option("--field", field, "q | f2 | fp:<p>");

    auto* schz = app.add_subcommand("schenzel", "Schenzel decomposition h = h_alg + h_top");
    schz->add_option("file", path)->required();
    schz->add_option("--field", field, "q | f2 | fp:<p>");
    schz->add_option("--seed", seed, "seed for the generic linear system");
    schz->add_option("--max-degree", max_degree, "unused cap, accepted for compatibility");

    auto* cyc = app.add_subcommand("polytope-cyclic", "cyclic polytope f/h-vectors");
    cyc->add_option("-d", d, "dimension")->required();
    cyc->add_option("-n", n, "number of vertices")->required();

    auto* msum = app.add_subcommand("mink-sum", "Minkowski sum face counts of a family");
    msum->add_option("file", path, "family JSON")->required();

    auto* mver = app.add_subcommand("mink-verify", "verify all bounds/identities on a family");
    mver->add_option("file", path, "family JSON")->required();

    auto* bnd = app.add_subcommand("bound", "MUBT/nu bound tables");
    bnd->add_option("--mode", mode, "mubt | nu")->check(CLI::IsMember({"mubt", "nu"}));
    bnd->add_option("-d", d, "dimension")->required();
    bnd->add_option("--alpha", alpha, "vertex counts a,b,c")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (stats->parsed()) return cmd_complex_stats(path, pretty);
        if (check->parsed()) return cmd_complex_check(path, field, pretty);
        if (schz->parsed()) return cmd_schenzel(path, field, seed, pretty);
        if (cyc->parsed()) return cmd_polytope_cyclic(d, n, pretty);
        if (msum->parsed()) return cmd_mink_sum(path, pretty);
        if (mver->parsed()) return cmd_mink_verify(path, pretty);
        if (bnd->parsed()) return cmd_bound(mode, d, alpha, pretty);
    } catch (const MathError& e) {
        std::cerr << "assertion violated: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        std::cerr << "assertion violated: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
