// Upper-bound functions: sphere UBT, isoperimetric ball/manifold bounds,
// arrangement bounds, the MUBT table (pure families), the ν table (general
// families), nb_k f-vector bounds, mixed-face bounds, and a verification
// driver comparing all of them against geometric ground truth.
#pragma once

#include <map>
#include <optional>
#include <string>

#include "relsr/complex.hpp"
#include "relsr/homology.hpp"
#include "relsr/polytope.hpp"

namespace relsr {

// C(n-d+k-1, k): the Cohen-Macaulay h-vector bound for a complex on n
// vertices with no small non-faces.
i64 ubt_h_bound(i64 n, int d, int k);

// Isoperimetric bounds for a (d-1)-ball with m interior and n boundary
// vertices: the glbc variant does not subtract the boundary contribution,
// the full variant does (boundary full in the ball).  For k > d/2 both
// variants use the C(m+n-1-k, d-k) form.
enum class IsoVariant { glbc, full };
i64 iso_ball_bounds(i64 m, i64 n, int d, int k, IsoVariant variant);

// Manifold-with-boundary variant: binomial difference plus the topological
// correction C(d,k) Σ_{i=0}^{k-1} (-1)^{k-i} β̃_{i-1}(M,B).
i64 manifold_iso_bound(i64 m, i64 n, int d, int k, const BettiTable& betti_pair);

// Bound on h_k(Δ, Γ_1 ∪ ... ∪ Γ_m) for an arrangement of m pairwise disjoint
// codimension-one CM subcomplexes with f_0(Δ) = f0_ambient.  Without ell the
// arrangement itself is assumed full; with ell (> 1) every union of at most
// ell members is assumed full and the interpolated poset/correction is used.
i64 arrangement_bound(i64 f0_ambient, const std::vector<i64>& member_f0, int d, int k,
                      std::optional<int> ell = std::nullopt);

// Dimension of the Minkowski sum of a subfamily with vertex counts alpha:
// ξ(α) = min(d, |α| - #α).
i64 xi(const std::vector<i64>& alpha, int d);

// c'(k,m,d) = 2k + 2m - 1 - d and its clamp c = min(m, max(c', 1)) used in
// the recursive h-vector decomposition.
int c_prime(int k, int m, int d);
int c_clamp(int k, int m, int d);

// Tight h̃-bound tables for Cayley complexes of polytope families with vertex
// counts alpha in dimension d.  values[mask] holds the h̃-bound of the
// subfamily S = mask at its intrinsic degree ξ(α_S) + |S| - 1; entries
// outside that range are 0.  Pure mode assumes every α_i ≥ d+1 (then
// ξ(α_S) = d throughout); nonpure mode handles arbitrary α_i ≥ 1.
enum class BoundMode { mubt, nu };

struct BoundTable {
    std::vector<i64> alpha;
    int d = 0;
    BoundMode mode = BoundMode::mubt;
    std::map<unsigned, std::vector<i64>> values;  // mask -> h̃-bounds, index 0..e_S+|S|-1

    int m() const { return static_cast<int>(alpha.size()); }
    unsigned full_mask() const { return (1u << m()) - 1u; }

    // ξ(α_S) for the subfamily selected by mask; 0 for the empty mask.
    i64 e(unsigned mask) const;
    // A subfamily is deficient when its excess stays below the excess of the
    // whole family; its Cayley stratum is then a simplex of full dimension.
    bool is_deficient(unsigned mask) const;
    // Intrinsic top index: e(mask) + |mask| - 1, one higher for deficient
    // subfamilies.
    int top_index(unsigned mask) const;

    // h̃-bound (0 outside [0, top_index]).
    i64 htilde(unsigned mask, int j) const;
    // ℓ-th finite difference of the h̃-bound (the ⟨ℓ⟩ superscript).
    i64 htilde_diff(unsigned mask, int ell, int j) const;
    // Bound on h_j of the relative Cayley complex T°_S (h̃ minus the
    // renormalization offset (-1)^{j-|S|+1} C(top, j)).
    i64 h_bound(unsigned mask, int j) const;
    // Bound on h_j of the absolute Cayley complex T_S via the linearity
    // relation (the MUBT / ν function proper).
    i64 absolute_bound(unsigned mask, int j) const;

    // h-bounds of T°_[m] for j = 0..top_index(full).
    std::vector<i64> h_bounds() const;
    // nb_k bounds on f_k(|P_[m]|), k = 0..d-1 (f_{k+m-1} of the T°-bound).
    std::vector<i64> nb_f() const;

    // Re-evaluates the defining conditions (difference relation, linearity,
    // Dehn-Sommerville with its nonpure correction, initial terms, h̃_0
    // normalization); throws std::logic_error on any violation.
    void assert_conditions() const;
};

// Construct the table.  mubt_table requires all α_i ≥ d+1 and routes nonpure
// input to nu_table; both run the condition self-check before returning.
BoundTable mubt_table(const std::vector<i64>& alpha, int d);
BoundTable nu_table(const std::vector<i64>& alpha, int d);

// f_k(|P_[m]|) bounds for k = 0..d-1 from the appropriate table.
std::vector<i64> nb_f_bound(const std::vector<i64>& alpha, int d);

// Mixed-face bounds: h^mix bound indices 0..d+m-1, f^mix bounds k = 0..d-1.
// The facet-count bound is tight only for 0 < m < d (flagged).
struct MixedBounds {
    std::vector<i64> h_mix;
    std::vector<i64> f_mix;
    bool facet_claim_applicable = false;
};

MixedBounds mixed_bounds(const std::vector<i64>& alpha, int d);

// Verification driver: builds the Cayley complex of the family and checks
// every bound/identity of the theory against it.
struct FamilyCheck {
    std::string name;
    bool pass = false;
    bool skipped = false;
    std::string details;
};

struct FamilyReport {
    bool all_pass = false;
    int m = 0;
    int d = 0;
    std::vector<i64> alpha;
    std::vector<FamilyCheck> checks;
    // Degrees j with equality in the table domination check for the full
    // family, and the largest k0 admitted by the non-face support condition.
    std::vector<int> tight_degrees;
    int nonface_support_k0 = 0;
};

FamilyReport verify_family(const PolytopeFamily& family);

}  // namespace relsr
