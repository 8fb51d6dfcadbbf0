// Exact combinatorics of (relative) simplicial complexes: construction, local
// subcomplexes (link/star/deletion/skeleton), f/h/g-vectors, Hilbert
// numerators, fullness, arrangements, intersection posets, coarse nerves,
// relative shelling verification and Eulerian predicates.
#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "relsr/binomial.hpp"

namespace relsr {

// A face is a strictly increasing list of non-negative vertex ids.
using Face = std::vector<int>;

// Dimension sentinel for the void complex (which has no faces at all).
// The empty complex {∅} has dimension -1; the void complex never takes part
// in dimension arithmetic.
constexpr int kDimVoid = -0x40000000;

// An abstract simplicial complex, stored by its facets (inclusion-maximal
// faces).  Distinguishes the void complex (no faces) from the empty complex
// {∅}.  Instances are immutable after construction.
class SimplicialComplex {
  public:
    // The void complex: no faces, no vertices.
    SimplicialComplex() = default;

    // The empty complex {∅}.
    static SimplicialComplex empty_complex();

    // Builds from facet lists: deduplicates, removes dominated faces, sorts.
    // [] yields the void complex, [[]] the empty complex {∅}.
    // Throws std::invalid_argument on a face with repeated vertices.
    static SimplicialComplex from_facets(std::vector<Face> facet_lists);

    // The full simplex on the given vertex set.
    static SimplicialComplex full_simplex(Face vertices);

    bool is_void() const { return is_void_; }
    bool is_empty_complex() const { return !is_void_ && facets_.size() == 1 && facets_[0].empty(); }

    // dim = size of largest facet - 1; kDimVoid for the void complex.
    int dim() const;

    const std::vector<Face>& facets() const { return facets_; }
    const std::vector<int>& vertices() const { return vertices_; }
    int n_vertices() const { return static_cast<int>(vertices_.size()); }

    bool has_face(const Face& sigma) const;

    // All faces including ∅ (unless void), sorted by (size, lex).
    std::vector<Face> all_faces() const;

    // f_{i-1} = #faces of cardinality i, index 0..dim+1.  Void -> empty vector.
    std::vector<i64> face_counts() const;

    // Lk(σ, Δ) = {τ : σ ∪ τ ∈ Δ, σ ∩ τ = ∅}; void if σ ∉ Δ.
    SimplicialComplex link(const Face& sigma) const;

    // St(σ, Δ) = {τ : σ ∪ τ ∈ Δ}; void if σ ∉ Δ.
    SimplicialComplex star(const Face& sigma) const;

    // Δ - σ = {τ ∈ Δ : σ ⊄ τ}.
    SimplicialComplex deletion(const Face& sigma) const;

    // Faces of dimension < i (cardinality <= i).  skeleton(0) = {∅} for a
    // non-void complex.
    SimplicialComplex skeleton(int i) const;

    // Restriction Δ ∩ K_W to a vertex set W (faces with vertices in W).
    SimplicialComplex restriction(const Face& w) const;

    bool is_subcomplex_of(const SimplicialComplex& other) const;
    bool is_pure() const;

    static SimplicialComplex intersect(const SimplicialComplex& a, const SimplicialComplex& b);
    static SimplicialComplex unite(const SimplicialComplex& a, const SimplicialComplex& b);

    // Structural equality (same face set).
    bool operator==(const SimplicialComplex& other) const {
        return is_void_ == other.is_void_ && facets_ == other.facets_;
    }

  private:
    bool is_void_ = true;
    std::vector<Face> facets_;   // sorted by (size, lex); pairwise incomparable
    std::vector<int> vertices_;  // sorted union of facet vertices
};

// A relative simplicial complex Ψ = (Δ, Γ): the faces of Ψ are the faces of
// Δ that are not faces of Γ.  Γ may be void (then Ψ is just Δ with the empty
// face included) or the empty complex.
struct RelativeComplex {
    SimplicialComplex delta;
    SimplicialComplex gamma;  // subcomplex of delta (possibly void)

    RelativeComplex() = default;
    RelativeComplex(SimplicialComplex d, SimplicialComplex g);

    static RelativeComplex absolute(SimplicialComplex d) {
        return RelativeComplex(std::move(d), SimplicialComplex());
    }

    bool contains(const Face& sigma) const {
        return delta.has_face(sigma) && !gamma.has_face(sigma);
    }

    // Faces of Δ ∖ Γ, sorted by (size, lex).  Possibly empty.
    std::vector<Face> faces() const;

    // max dim over Δ ∖ Γ; kDimVoid when there are no relative faces.
    int dim() const;

    // All maximal relative faces have the same dimension.
    bool is_pure() const;

    // Componentwise local subcomplexes.
    RelativeComplex link(const Face& sigma) const {
        return RelativeComplex(delta.link(sigma), gamma.link(sigma));
    }
    RelativeComplex star(const Face& sigma) const {
        return RelativeComplex(delta.star(sigma), gamma.star(sigma));
    }
    RelativeComplex deletion(const Face& sigma) const {
        return RelativeComplex(delta.deletion(sigma), gamma.deletion(sigma));
    }
    RelativeComplex skeleton(int i) const {
        return RelativeComplex(delta.skeleton(i), gamma.skeleton(i));
    }
};

// f/h/g-vectors of a (relative) complex at degree convention d (= dim + 1
// unless overridden): f indexed 0..d (f[i] = f_{i-1}), h indexed 0..d,
// g indexed 1..d stored at g[1..d] (g[0] = h[0] by convention g_k = h_k -
// h_{k-1} with h_{-1} = 0).
struct FHVectors {
    int d = 0;
    std::vector<i64> f;  // f[i] = f_{i-1}, i = 0..d
    std::vector<i64> h;  // h[k], k = 0..d
    std::vector<i64> g;  // g[k] = h[k] - h[k-1], k = 0..d (g[0] = h[0])
    i64 chi = 0;         // (reduced) Euler characteristic = (-1)^{d-1} h_d
};

// Eq. (1) conversions between f- and h-vectors at degree convention d.
std::vector<i64> f_to_h(const std::vector<i64>& f, int d);
std::vector<i64> h_to_f(const std::vector<i64>& h, int d);

// Enumerative vectors of a relative complex; d_override >= dim+1 embeds the
// complex in a larger degree convention.  Rejects rc with void Δ.
FHVectors fh_vectors(const RelativeComplex& rc, std::optional<int> d_override = std::nullopt);

// Coefficients of (1-t)^ell · Hilb(M[rc], t) for degrees 0..max_degree.
// For ell = dim + 1 this is the h-vector (padded with zeros).
std::vector<i64> hilbert_numerator(const RelativeComplex& rc, int ell, int max_degree);

// Γ is full in Δ iff Γ = Δ ∩ K_{V(Γ)}.  Throws if Γ is not a subcomplex of Δ.
bool is_full(const SimplicialComplex& delta, const SimplicialComplex& gamma);

// An arrangement of subcomplexes of a common ambient complex.
struct Arrangement {
    SimplicialComplex ambient;
    std::vector<SimplicialComplex> members;

    Arrangement() = default;
    Arrangement(SimplicialComplex amb, std::vector<SimplicialComplex> mem);

    // Union of the members (void when there are none).
    SimplicialComplex support() const;

    // Per-member fullness in the ambient complex.
    std::vector<bool> fullness_flags() const;
};

// The intersection poset P(G): all distinct intersections of member subsets
// together with the ambient complex Δ as minimum, ordered by reverse
// inclusion, with Möbius function computed from Δ.
struct IntersectionPoset {
    std::vector<SimplicialComplex> elements;  // elements[0] = ambient Δ
    std::vector<i64> mobius;                  // mobius[0] = 1
};

IntersectionPoset intersection_poset(const Arrangement& arr);

// Coarse nerve: union of the full simplices K_{V(Γ)} over members Γ.
SimplicialComplex coarse_nerve(const Arrangement& arr);

// Result of a relative shelling verification.
struct ShellingResult {
    bool ok = false;
    int failing_step = -1;     // 0-based index of the first bad step; -1 if ok
    std::vector<i64> h;        // accumulated h-vector (degree convention dim+1)
};

// Checks that facet_order is a relative shelling of rc (it must list exactly
// the facets of Δ that are not faces of Γ).  Each step must meet the previous
// subcomplex in a pure codimension-one subcomplex of its boundary with a
// unique minimal new face; the very first step of a shelling with void Γ may
// have empty intersection (restriction face ∅).
ShellingResult verify_relative_shelling(const RelativeComplex& rc, const std::vector<Face>& facet_order);

// Eulerian: rc pure and χ(Lk(σ,rc)) = (-1)^{dim Lk(σ,rc)} for all σ ∈ rc;
// weakly Eulerian: the same over all nonempty faces of rc.
bool is_eulerian(const RelativeComplex& rc, bool weak);

// Reduced Euler characteristic of rc (includes the empty face when present).
i64 euler_characteristic(const RelativeComplex& rc);

}  // namespace relsr
