// Python bindings: a thin functional surface over the exact C++ core.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "relsr/algebra.hpp"
#include "relsr/bounds.hpp"
#include "relsr/homology.hpp"
#include "relsr/polytope.hpp"

namespace py = pybind11;
using namespace relsr;

namespace {

using Facets = std::vector<std::vector<int>>;

RelativeComplex make_rc(const Facets& delta, const std::optional<Facets>& gamma) {
    SimplicialComplex g;
    if (gamma && !gamma->empty()) g = SimplicialComplex::from_facets(*gamma);
    return RelativeComplex(SimplicialComplex::from_facets(delta), std::move(g));
}

py::dict stats(const Facets& delta, const std::optional<Facets>& gamma,
               std::optional<int> d_override) {
    const FHVectors fh = fh_vectors(make_rc(delta, gamma), d_override);
    py::dict out;
    out["d"] = fh.d;
    out["f"] = fh.f;
    out["h"] = fh.h;
    out["g"] = fh.g;
    out["chi"] = fh.chi;
    return out;
}

py::dict schenzel(const Facets& delta, const std::optional<Facets>& gamma,
                  const std::string& field, i64 seed) {
    const SchenzelResult r =
        schenzel_decompose(make_rc(delta, gamma), FieldSpec::parse(field), seed);
    py::dict out;
    out["h"] = r.h;
    out["h_alg"] = r.h_alg;
    out["h_top"] = r.h_top;
    return out;
}

std::vector<i64> betti_numbers(const Facets& delta, const std::optional<Facets>& gamma,
                               const std::string& field) {
    return betti(make_rc(delta, gamma), FieldSpec::parse(field)).reduced_betti;
}

bool cohen_macaulay(const Facets& delta, const std::string& field) {
    return is_cohen_macaulay(RelativeComplex::absolute(SimplicialComplex::from_facets(delta)),
                             FieldSpec::parse(field));
}

bool buchsbaum(const Facets& delta, const std::string& field) {
    return is_buchsbaum(RelativeComplex::absolute(SimplicialComplex::from_facets(delta)),
                        FieldSpec::parse(field));
}

std::vector<i64> cyclic_f(int d, int n) { return cyclic_polytope(d, n).f_vector(); }

}  // namespace

PYBIND11_MODULE(_relsr, m) {
    m.doc() = "Exact f/h-vector calculus for relative simplicial complexes, "
              "Minkowski sums and their upper-bound tables";
    m.def("stats", &stats, py::arg("delta"), py::arg("gamma") = std::nullopt,
          py::arg("d") = std::nullopt,
          "f/h/g-vectors and Euler characteristic of a (relative) complex given by facets");
    m.def("schenzel", &schenzel, py::arg("delta"), py::arg("gamma") = std::nullopt,
          py::arg("field") = "q", py::arg("seed") = 0,
          "Schenzel decomposition h = h_alg + h_top of a Buchsbaum relative complex");
    m.def("betti", &betti_numbers, py::arg("delta"), py::arg("gamma") = std::nullopt,
          py::arg("field") = "q",
          "reduced Betti numbers beta_{-1}..beta_dim (list offset by one)");
    m.def("is_cohen_macaulay", &cohen_macaulay, py::arg("delta"), py::arg("field") = "q");
    m.def("is_buchsbaum", &buchsbaum, py::arg("delta"), py::arg("field") = "q");
    m.def("nb_f_bound", &nb_f_bound, py::arg("alpha"), py::arg("d"),
          "bounds on f_k of a Minkowski sum of polytopes with the given vertex counts");
    m.def("cyclic_f_vector", &cyclic_f, py::arg("d"), py::arg("n"),
          "f-vector of the cyclic polytope Cyc_d(n)");
}
