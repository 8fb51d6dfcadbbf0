#include "relsr/json_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace relsr {

namespace {

using nlohmann::json;

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

SimplicialComplex complex_from(const json& j, const std::string& what) {
    if (!j.is_object() || !j.contains("facets") || !j["facets"].is_array())
        throw std::invalid_argument(what + ": expected an object with a \"facets\" array");
    std::vector<Face> facets;
    for (const auto& f : j["facets"]) {
        if (!f.is_array()) throw std::invalid_argument(what + ": each facet must be an array");
        Face face;
        for (const auto& v : f) {
            if (!v.is_number_integer())
                throw std::invalid_argument(what + ": vertex ids must be integers");
            face.push_back(v.get<int>());
        }
        facets.push_back(std::move(face));
    }
    return SimplicialComplex::from_facets(std::move(facets));
}

RelativeComplex relative_from(const json& j) {
    if (j.is_object() && j.contains("delta")) {
        SimplicialComplex delta = complex_from(j["delta"], "delta");
        SimplicialComplex gamma;  // void
        if (j.contains("gamma") && !j["gamma"].is_null())
            gamma = complex_from(j["gamma"], "gamma");
        return RelativeComplex(std::move(delta), std::move(gamma));
    }
    return RelativeComplex::absolute(complex_from(j, "complex"));
}

mpq_class rational_from(const json& v, const std::string& what) {
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return mpq_class(static_cast<long>(v.get<long long>()));
    throw std::invalid_argument(what + ": coordinates must be rational strings or integers");
}

RationalPolytope polytope_from(const json& j, const std::string& what) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("vertices") ||
        !j["dim"].is_number_integer() || !j["vertices"].is_array())
        throw std::invalid_argument(what +
                                    ": expected an object with \"dim\" and \"vertices\"");
    const int dim = j["dim"].get<int>();
    if (dim < 1) throw std::invalid_argument(what + ": dim must be >= 1");
    Mat points;
    for (const auto& row : j["vertices"]) {
        if (!row.is_array() || static_cast<int>(row.size()) != dim)
            throw std::invalid_argument(what + ": each vertex needs exactly dim coordinates");
        Vec p;
        for (const auto& c : row) p.push_back(rational_from(c, what));
        points.push_back(std::move(p));
    }
    if (points.empty()) throw std::invalid_argument(what + ": vertices must be nonempty");
    return convex_hull(points, dim);
}

}  // namespace

std::string load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot read file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

SimplicialComplex parse_complex_json(const std::string& text) {
    return complex_from(parse_text(text), "complex");
}

RelativeComplex parse_relative_json(const std::string& text) {
    return relative_from(parse_text(text));
}

RationalPolytope parse_polytope_json(const std::string& text) {
    return polytope_from(parse_text(text), "polytope");
}

PolytopeFamily parse_family_json(const std::string& text) {
    const json j = parse_text(text);
    if (!j.is_object() || !j.contains("d") || !j.contains("members") ||
        !j["d"].is_number_integer() || !j["members"].is_array())
        throw std::invalid_argument("family: expected an object with \"d\" and \"members\"");
    PolytopeFamily fam;
    fam.d = j["d"].get<int>();
    if (fam.d < 1) throw std::invalid_argument("family: d must be >= 1");
    for (std::size_t i = 0; i < j["members"].size(); ++i) {
        json member = j["members"][i];
        if (member.is_object() && !member.contains("dim")) member["dim"] = fam.d;
        fam.members.push_back(polytope_from(member, "member " + std::to_string(i)));
    }
    if (fam.members.empty()) throw std::invalid_argument("family: members must be nonempty");
    return fam;
}

}  // namespace relsr
