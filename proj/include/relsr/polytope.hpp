// Exact rational polytopes: convex hulls with face lattices, cyclic
// polytopes, Minkowski sums with summand decompositions, Cayley
// polytopes/complexes, mixed faces, general-position checks and perturbation.
#pragma once

#include <map>

#include "relsr/complex.hpp"
#include "relsr/rational.hpp"

namespace relsr {

// A face recorded by its (sorted) vertex ids and intrinsic dimension.
struct PolytopeFace {
    std::vector<int> vertex_ids;
    int dim = -1;
};

// A polytope given by its extreme points, with facet hyperplanes and a
// lazily computed face lattice (intersection closure of facet vertex sets).
struct RationalPolytope {
    int dim_ambient = 0;
    int dim = -1;  // intrinsic dimension
    Mat vertices;  // rows = extreme points, exact rationals

    std::vector<PolytopeFace> facets;  // vertex sets of the facets
    Mat facet_normals;                 // ambient functionals a: a·x <= offset
    std::vector<mpq_class> facet_offsets;

    // All proper nonempty faces, sorted by (dim, vertex set); computed on
    // first use.  The improper face (the polytope itself) is not included.
    const std::vector<PolytopeFace>& face_lattice() const;

    // f[i] = number of i-dimensional proper faces, i = 0..dim-1.
    std::vector<i64> f_vector() const;

  private:
    mutable std::vector<PolytopeFace> lattice_;
    mutable bool lattice_ready_ = false;
};

// Exact convex hull.  Facets are found by exhaustive supporting-hyperplane
// search over affinely independent subsets; beyond a size cutoff an
// equivalent exact ridge-pivoting (gift-wrapping) enumeration is used.
// Lower-dimensional input is reduced to a spanning coordinate subset first.
RationalPolytope convex_hull(const Mat& points, int dim_ambient);

// Moment-curve polytope at n distinct rational parameters (default 1..n).
RationalPolytope cyclic_polytope(int d, int n, const std::vector<mpq_class>& parameters = {});

// A family of polytopes in a common ambient dimension.
struct PolytopeFamily {
    int d = 0;  // ambient dimension
    std::vector<RationalPolytope> members;

    std::vector<i64> vertex_counts() const;
    bool is_pure() const;  // all f_0 >= d+1
};

// Minkowski sum with the face decomposition F = F_1 + ... + F_m: for each
// proper face of the sum, the member faces picked out by a functional in the
// relative interior of its normal cone.
struct MinkowskiSum {
    RationalPolytope sum;
    // decomposition[i] corresponds to sum.face_lattice()[i]: per member, the
    // vertex ids (into that member) of F_i, plus its dimension.
    std::vector<std::vector<PolytopeFace>> decomposition;
};

MinkowskiSum minkowski_sum(const PolytopeFamily& family);

// Cayley polytope and complex of a simplicial family in relatively general
// position.  Complex vertex ids are 1-based across the concatenated members;
// label_of_vertex[id-1] gives the summand index (0-based).
struct CayleyData {
    RationalPolytope cayley;           // in R^{d+m}
    std::vector<int> label_of_vertex;  // size = total vertex count
    SimplicialComplex t_full;          // T_[m]
    std::map<unsigned, SimplicialComplex> t_s;  // label-subset mask -> T_S
    RelativeComplex t_circ;            // T° = (T_[m], ∪_i T_[m]∖i)
};

CayleyData cayley_complex(const PolytopeFamily& family);

// True iff dim F = Σ dim F_i for every proper face of the sum.
bool check_relative_general_position(const PolytopeFamily& family);

// Seeded rational jitter (denominators bounded by 10^6), magnitude halved
// until every member stays simplicial with unchanged vertex count and the
// family is in relatively general position.  Throws when the budget runs out.
PolytopeFamily perturb(const PolytopeFamily& family, i64 seed, const mpq_class& magnitude);

// f^mix[j] = number of j-dimensional proper faces of the sum whose
// decomposition has dim F_i > 0 for every member, j = 0..d-1.
std::vector<i64> mixed_faces(const PolytopeFamily& family);

// Exhaustive search for a smallest non-face of Cay(P_[m]) of size at most
// ⌊(d+m+1)/2⌋; requires Σ f_0(P_i) > d+m.
int radon_nonface_search(const PolytopeFamily& family);

}  // namespace relsr
