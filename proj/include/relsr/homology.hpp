// Reduced and relative simplicial homology over ℚ and GF(p); topological
// predicates (Cohen–Macaulay, Buchsbaum, cover quality) and the topological
// Schenzel component h^top.
#pragma once

#include <map>

#include "relsr/complex.hpp"
#include "relsr/field.hpp"

namespace relsr {

// Reduced Betti numbers β̃_i for i = -1..dim, stored at reduced_betti[i+1].
struct BettiTable {
    std::vector<i64> reduced_betti;
    FieldSpec field;

    i64 betti(int i) const {
        const int idx = i + 1;
        if (idx < 0 || idx >= static_cast<int>(reduced_betti.size())) return 0;
        return reduced_betti[idx];
    }
};

// Reduced (relative) simplicial homology via exact boundary-matrix ranks.
BettiTable betti(const RelativeComplex& rc, const FieldSpec& field);

// Reisner: CM iff β̃_i(Lk(σ,rc)) = 0 for all σ ∈ Δ and i < dim Lk(σ,rc).
bool is_cohen_macaulay(const RelativeComplex& rc, const FieldSpec& field);

// Buchsbaum iff pure and β̃_i(Lk(σ,rc)) = 0 for every nonempty σ ∈ Δ and all
// i < d - dim σ - 1.  Throws on non-pure input.
bool is_buchsbaum(const RelativeComplex& rc, const FieldSpec& field);

// Coarse Hilbert function of H^i_m(M[rc]): degree -j ↦ dimension, computed
// down to degree -max_shift via the relative Hochster formula.
std::map<int, i64> local_cohomology_hilbert(const RelativeComplex& rc, const FieldSpec& field,
                                            int i, int max_shift = -1);

// Topological Schenzel component: h^top_k = C(d,k) Σ_{i=0}^{k-1} (-1)^{k-i}
// β̃_{i-1}(rc).  Requires rc Buchsbaum over the field.
std::vector<i64> h_top(const RelativeComplex& rc, const FieldSpec& field);

// (ℓ-t)-acyclicity over every t-subset of members (ℓ-good), and goodness of
// every face-link restriction (ℓ-magnificent).
struct CoverQuality {
    bool is_good = false;
    bool is_magnificent = false;
};

CoverQuality cover_quality(const SimplicialComplex& delta, const Arrangement& arr, int ell,
                           const FieldSpec& field = FieldSpec::Q());

}  // namespace relsr
