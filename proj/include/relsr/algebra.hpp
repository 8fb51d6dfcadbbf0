// Graded face modules M[Δ,Γ] with monomial bases, generic linear systems of
// parameters, quotient dimensions h^alg, the Schenzel decomposition
// h = h^alg + h^top, nerve-ideal presentation bounds and monotonicity /
// reverse-isoperimetry checks.
#pragma once

#include <map>

#include "relsr/complex.hpp"
#include "relsr/field.hpp"

namespace relsr {

// Degree-truncated monomial basis of the face module M[Δ,Γ]: the degree-k
// slice is spanned by the exponent vectors α with |α| = k and supp(α) a face
// of Δ not in Γ.
struct GradedModule {
    RelativeComplex rc;
    int max_degree = 0;
    std::vector<int> vars;  // vertex ids of Δ, in order; n = vars.size()

    // basis[k] lists the degree-k exponent vectors (each of length n);
    // index[k] maps an exponent vector back to its position in basis[k].
    std::vector<std::vector<std::vector<int>>> basis;
    std::vector<std::map<std::vector<int>, int>> index;

    // max_degree < 0 defaults to dim Δ + 1.
    explicit GradedModule(RelativeComplex rc_in, int max_degree_in = -1);

    int n() const { return static_cast<int>(vars.size()); }
    i64 dim_at(int k) const {
        return (k < 0 || k > max_degree) ? 0 : static_cast<i64>(basis[k].size());
    }
};

// A (partial) linear system Θ = (θ_1, ..., θ_len), each θ a coefficient
// vector over the variables of the complex it was drawn for.
struct LinearSystem {
    std::vector<std::vector<i64>> theta;
    i64 seed = 0;
    FieldSpec field;
    bool certified = false;
};

// Seeded generic linear system of parameters for M[rc], certified by the
// facet-rank criterion: for every facet F of Δ, the columns of F have rank
// min(length, |F|).  Over a small prime field, falls back to a seeded
// backtracking column search once random draws have used half the retry
// budget.  Throws after the retry budget is exhausted.
LinearSystem generic_lsop(const RelativeComplex& rc, int length, i64 seed,
                          const FieldSpec& field = FieldSpec::Q());

// h^alg: per-degree dimensions of M/ΘM for degrees 0..max_degree, by exact
// rank computation of the Θ-image inside each graded slice.  Requires a
// certified system.
std::vector<i64> quotient_dims(const GradedModule& m, const LinearSystem& theta);

struct SchenzelResult {
    std::vector<i64> h;
    std::vector<i64> h_alg;
    std::vector<i64> h_top;
};

// Relative Schenzel decomposition h = h^alg + h^top for a Buchsbaum complex;
// the identity is asserted entrywise before returning.
SchenzelResult schenzel_decompose(const RelativeComplex& rc, const FieldSpec& field, i64 seed);

// Presentation bound for h^alg_k(Δ, ∪𝒢) through the nerve ideal of a full
// arrangement: Möbius-weighted binomial sum over the intersection poset minus
// the Betti correction of the coarse nerve.  Requires the skeleton pair
// (K_n^{(d)}, 𝔑^{(d)}) to be Buchsbaum over the field.
i64 nerve_bound(const SimplicialComplex& delta, const Arrangement& arr, int k,
                const FieldSpec& field);

// Monotonicity of quotients under passing to a subcomplex Δ' ⊆ Δ with
// Γ' = Γ ∩ Δ' and the same Θ restricted: returns whether
// dim(M[Δ',Γ']/ΘM)_k ≤ dim(M[Δ,Γ]/ΘM)_k.
bool monotone_quotient_check(const RelativeComplex& rc, const SimplicialComplex& sub_delta,
                             const LinearSystem& theta, int k);

// Boundary of a pure complex: the codimension-one faces lying in exactly one
// facet (as a complex; void when there are none).
SimplicialComplex boundary_complex(const SimplicialComplex& delta);

// Reverse isoperimetric inequality h_k(Δ,∂Δ) ≥ h_{k-1}(∂Δ) for a
// triangulated ball with full boundary.  Throws distinct errors when delta is
// not recognized as a ball or the boundary is not full.
bool reverse_iso_check(const SimplicialComplex& delta);

}  // namespace relsr
