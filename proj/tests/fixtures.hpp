// Shared test fixtures: frozen complexes and small random generators.
#pragma once

#include <random>

#include "relsr/complex.hpp"

namespace relsr::fixtures {

// The minimal 6-vertex triangulation of the real projective plane
// (antipodal quotient of the icosahedron): 10 triangles, every edge in
// exactly two, every vertex link a pentagon.
inline SimplicialComplex rp2_6() {
    return SimplicialComplex::from_facets({{1, 2, 3},
                                           {1, 2, 4},
                                           {1, 3, 5},
                                           {1, 4, 6},
                                           {1, 5, 6},
                                           {2, 3, 6},
                                           {2, 4, 5},
                                           {2, 5, 6},
                                           {3, 4, 5},
                                           {3, 4, 6}});
}

inline SimplicialComplex boundary_simplex(int d) {
    // boundary of the d-simplex on vertices 1..d+1
    std::vector<Face> fs;
    for (int skip = 1; skip <= d + 1; ++skip) {
        Face f;
        for (int v = 1; v <= d + 1; ++v)
            if (v != skip) f.push_back(v);
        fs.push_back(f);
    }
    return SimplicialComplex::from_facets(fs);
}

}  // namespace relsr::fixtures
