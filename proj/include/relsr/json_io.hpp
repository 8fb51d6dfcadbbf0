// JSON input parsing for the CLI and bindings: simplicial complexes,
// relative complexes, rational polytopes and polytope families.  All
// schema violations are reported as std::invalid_argument.
#pragma once

#include <string>

#include "relsr/complex.hpp"
#include "relsr/polytope.hpp"

namespace relsr {

// Reads a whole file; throws std::invalid_argument when unreadable.
std::string load_file(const std::string& path);

// {"facets":[[1,2],[2,3]]} — vertex ids are integers.
SimplicialComplex parse_complex_json(const std::string& text);

// {"delta":<complex>,"gamma":<complex>|null}; a bare complex object is
// accepted as the absolute relative complex (Γ = ∅).
RelativeComplex parse_relative_json(const std::string& text);

// {"dim":2,"vertices":[["0","0"],["1","0"],["0","1"]]} — coordinates are
// exact rational strings ("p/q" or "p") or plain integers.
RationalPolytope parse_polytope_json(const std::string& text);

// {"d":2,"members":[<polytope>,...]}.
PolytopeFamily parse_family_json(const std::string& text);

}  // namespace relsr
