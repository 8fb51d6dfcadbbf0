#include "relsr/bounds.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace relsr {

namespace {

int popcount(unsigned x) { return __builtin_popcount(x); }

// (-1)^k for possibly negative k.
i64 par_sign(i64 k) { return (((k % 2) + 2) % 2 == 0) ? 1 : -1; }

i64 subset_sum(const std::vector<i64>& alpha, unsigned mask) {
    i64 s = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (mask & (1u << i)) s += alpha[i];
    return s;
}

}  // namespace

i64 ubt_h_bound(i64 n, int d, int k) { return binom(n - d + k - 1, k); }

i64 iso_ball_bounds(i64 m, i64 n, int d, int k, IsoVariant variant) {
    if (2 * k <= d) {
        i64 b = binom(m + n - d + k - 1, k);
        if (variant == IsoVariant::full) b -= binom(n - d + k - 1, k);
        return b;
    }
    return binom(m + n - 1 - k, d - k);
}

i64 manifold_iso_bound(i64 m, i64 n, int d, int k, const BettiTable& betti_pair) {
    i64 b = binom(m + n - d + k - 1, k) - binom(n - d + k - 1, k);
    i64 corr = 0;
    for (int i = 0; i < k; ++i) corr += par_sign(k - i) * betti_pair.betti(i - 1);
    return b + binom(d, k) * corr;
}

i64 arrangement_bound(i64 f0_ambient, const std::vector<i64>& member_f0, int d, int k,
                      std::optional<int> ell) {
    const int m = static_cast<int>(member_f0.size());
    if (!ell.has_value()) {
        // full union of disjoint codimension-one CM members
        i64 b = gbinom(f0_ambient - d + k - 1, k);
        for (i64 ni : member_f0) b -= gbinom(ni - d + k - 1, k);
        b += static_cast<i64>(m - 1) * gbinom(-static_cast<i64>(d) + k - 1, k);
        return b;
    }
    const int l = *ell;
    if (l <= 1) throw std::invalid_argument("arrangement_bound: ell must exceed 1");
    // poset of unions of at most ell members, Moebius weights (-1)^{|S|}
    i64 b = gbinom(f0_ambient - d + k - 1, k);
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        const int s = popcount(mask);
        if (s > l) continue;
        b += par_sign(s) * gbinom(subset_sum(member_f0, mask) - d + k - 1, k);
    }
    i64 mu_empty = 0;
    for (int j = 0; j <= l; ++j) mu_empty -= par_sign(j) * binom(m, j);
    b += mu_empty * gbinom(-static_cast<i64>(d) + k - 1, k);
    // topological component of the union (independent of ell)
    if (k >= 3) b += par_sign(k) * static_cast<i64>(m - 1) * binom(d, k);
    // nerve correction: the coarse nerve carries the homology of the
    // (ell-1)-skeleton of a simplex on m vertices
    if (k >= l + 2) b += par_sign(k + l) * binom(m - 1, l) * binom(d, k);
    return b;
}

i64 xi(const std::vector<i64>& alpha, int d) {
    i64 total = 0;
    for (i64 a : alpha) total += a;
    return std::min<i64>(d, total - static_cast<i64>(alpha.size()));
}

int c_prime(int k, int m, int d) { return 2 * k + 2 * m - 1 - d; }

int c_clamp(int k, int m, int d) { return std::min(m, std::max(c_prime(k, m, d), 1)); }

i64 BoundTable::e(unsigned mask) const {
    i64 total = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i)
        if (mask & (1u << i)) total += alpha[i];
    return std::min<i64>(d, total - popcount(mask));
}

bool BoundTable::is_deficient(unsigned mask) const { return e(mask) < e(full_mask()); }

int BoundTable::top_index(unsigned mask) const {
    // Deficient subfamilies span a simplex stratum of one dimension higher
    // than the boundary strata of full excess.
    const int s = popcount(mask);
    return static_cast<int>(e(mask)) + s - (is_deficient(mask) ? 0 : 1);
}

i64 BoundTable::htilde(unsigned mask, int j) const {
    auto it = values.find(mask);
    if (it == values.end() || j < 0 || j >= static_cast<int>(it->second.size())) return 0;
    return it->second[j];
}

i64 BoundTable::htilde_diff(unsigned mask, int ell, int j) const {
    i64 v = 0;
    for (int i = 0; i <= ell; ++i) v += par_sign(i) * binom(ell, i) * htilde(mask, j - i);
    return v;
}

i64 BoundTable::h_bound(unsigned mask, int j) const {
    const int s = popcount(mask);
    return htilde(mask, j) - par_sign(j - s + 1) * binom(top_index(mask), j);
}

i64 BoundTable::absolute_bound(unsigned mask, int j) const {
    i64 total = 0;
    unsigned r = mask;
    while (true) {
        if (r != 0) total += htilde_diff(r, top_index(mask) - top_index(r), j);
        if (r == 0) break;
        r = (r - 1) & mask;
    }
    return total;
}

namespace {

// Dehn-Sommerville correction at subfamily S: the duality reads
// absolute(e_S - k) = htilde(k + s - 1) + correction(S, k), where the
// correction collects one binomial per deficient proper subfamily,
//   corr(k) = (-1)^k sum_R (-1)^{|R|} C(top(S) - |alpha_R|, k + s - 1).
i64 ds_correction(const BoundTable& t, unsigned mask, i64 k) {
    const int s = popcount(mask);
    const i64 top = t.top_index(mask);
    i64 corr = 0;
    for (unsigned r = (mask - 1) & mask; r != 0; r = (r - 1) & mask) {
        if (t.is_deficient(r))
            corr += par_sign(k + popcount(r)) *
                    binom(top - subset_sum(t.alpha, r), k + s - 1);
    }
    return corr;
}

i64 initial_term(const BoundTable& t, unsigned mask, int j) {
    const int s = popcount(mask);
    const i64 k = static_cast<i64>(j) - s + 1;
    const i64 em = t.e(mask);
    i64 total = 0;
    for (unsigned r = mask;; r = (r - 1) & mask) {
        if (r != 0)
            total += par_sign(s - popcount(r)) * gbinom(subset_sum(t.alpha, r) - em + k - 1, j);
        if (r == 0) break;
    }
    return total;
}

BoundTable build_table(const std::vector<i64>& alpha, int d, BoundMode mode) {
    const int m = static_cast<int>(alpha.size());
    if (m < 1 || m > 16) throw std::invalid_argument("bound table: need 1..16 summands");
    if (d < 1) throw std::invalid_argument("bound table: dimension must be positive");
    for (i64 a : alpha)
        if (a < 1) throw std::invalid_argument("bound table: vertex counts must be positive");

    BoundTable t;
    t.alpha = alpha;
    t.d = d;
    t.mode = mode;
    t.values[0] = {};
    for (int s = 1; s <= m; ++s) {
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            if (popcount(mask) != s) continue;
            const int D = t.top_index(mask);
            std::vector<i64>& v = t.values[mask];
            v.assign(D + 1, 0);
            if (t.is_deficient(mask)) {
                // simplex stratum: the absolute complex is a cone, so the
                // linearity relation pins the h̃-values exactly
                for (int j = 0; j <= D; ++j) {
                    i64 rest = 0;
                    for (unsigned r = (mask - 1) & mask; r != 0; r = (r - 1) & mask)
                        rest += t.htilde_diff(r, D - t.top_index(r), j);
                    v[j] = (j == 0 ? 1 : 0) - rest;
                }
            } else {
                const int half = D / 2;
                for (int j = 0; j <= half; ++j) v[j] = initial_term(t, mask, j);
                for (int j = half + 1; j <= D; ++j) {
                    const i64 k = static_cast<i64>(j) - s + 1;
                    v[j] = t.absolute_bound(mask, D - j) - ds_correction(t, mask, k);
                }
            }
        }
    }
    t.assert_conditions();
    return t;
}

}  // namespace

void BoundTable::assert_conditions() const {
    const int mm = m();
    auto fail = [](const std::string& what) {
        throw std::logic_error("bound table inconsistency: " + what);
    };
    for (unsigned mask = 1; mask < (1u << mm); ++mask) {
        const int s = popcount(mask);
        const int D = top_index(mask);
        // h~_0 normalization
        if (htilde(mask, 0) != par_sign(s - 1)) fail("h~_0 normalization");
        if (is_deficient(mask)) {
            // the absolute complex of a simplex stratum is a cone
            for (int j = 0; j <= D; ++j)
                if (absolute_bound(mask, j) != (j == 0 ? 1 : 0)) fail("cone linearity");
            continue;
        }
        // initial terms on the lower half
        for (int j = 0; 2 * j <= D; ++j)
            if (htilde(mask, j) != initial_term(*this, mask, j)) fail("initial terms");
        // Dehn-Sommerville relation at every index (the lower half is a
        // genuine cross-check of the initial terms against the recursion)
        for (int j = 0; j <= D; ++j) {
            const i64 k = static_cast<i64>(j) - s + 1;
            if (absolute_bound(mask, D - j) != htilde(mask, j) + ds_correction(*this, mask, k))
                fail("Dehn-Sommerville relation");
        }
    }
    // difference relation
    for (int ell = 1; ell <= mm; ++ell)
        for (int j = 0; j <= top_index(full_mask()); ++j)
            if (htilde_diff(full_mask(), ell, j) !=
                htilde_diff(full_mask(), ell - 1, j) - htilde_diff(full_mask(), ell - 1, j - 1))
                fail("difference relation");
}

std::vector<i64> BoundTable::h_bounds() const {
    const int D = top_index(full_mask());
    std::vector<i64> h(D + 1);
    for (int j = 0; j <= D; ++j) h[j] = h_bound(full_mask(), j);
    return h;
}

std::vector<i64> BoundTable::nb_f() const {
    const int D = top_index(full_mask());
    const std::vector<i64> f = h_to_f(h_bounds(), D);
    std::vector<i64> nb(d, 0);
    for (int k = 0; k < d; ++k)
        if (k + m() <= D) nb[k] = f[k + m()];
    return nb;
}

BoundTable mubt_table(const std::vector<i64>& alpha, int d) {
    for (i64 a : alpha)
        if (a < d + 1) return nu_table(alpha, d);
    return build_table(alpha, d, BoundMode::mubt);
}

BoundTable nu_table(const std::vector<i64>& alpha, int d) {
    return build_table(alpha, d, BoundMode::nu);
}

std::vector<i64> nb_f_bound(const std::vector<i64>& alpha, int d) {
    return mubt_table(alpha, d).nb_f();
}

MixedBounds mixed_bounds(const std::vector<i64>& alpha, int d) {
    const int m = static_cast<int>(alpha.size());
    BoundTable t = mubt_table(alpha, d);
    MixedBounds out;
    out.facet_claim_applicable = (m > 0 && m < d);
    out.h_mix.assign(d + m, 0);
    for (int j = 0; j < d + m; ++j) {
        // empty subfamily: plain h-vector {1} at degree 0, m-fold difference
        i64 hm = par_sign(m) * par_sign(j - m) *
                 ((j - m >= 0 && j - m <= m) ? binom(m, j - m) : 0);
        for (unsigned mask = 1; mask < (1u << m); ++mask) {
            const int s = popcount(mask);
            const int ell = m - s;
            i64 g = 0;
            for (int i = 0; i <= ell; ++i)
                g += par_sign(i) * binom(ell, i) * t.h_bound(mask, j - m + s - i);
            hm += par_sign(ell) * g;
        }
        out.h_mix[j] = hm;
    }
    out.f_mix.assign(d, 0);
    for (int k = 0; k < d; ++k) {
        i64 fm = 0;
        for (int i = -m + 1; i <= d; ++i)
            fm += binom(d - i, k - i) * out.h_mix[i + m - 1];
        out.f_mix[k] = fm;
    }
    return out;
}

namespace {

// Per-subfamily data extracted from the Cayley complex: intrinsic h of the
// relative Cayley complex and its renormalization h~.
struct SubVectors {
    i64 a = 0;
    i64 e = 0;
    int D = -1;
    std::vector<i64> h;
    std::vector<i64> htilde;
};

i64 vec_at(const std::vector<i64>& v, int j) {
    if (j < 0 || j >= static_cast<int>(v.size())) return 0;
    return v[j];
}

i64 vec_diff(const std::vector<i64>& v, int ell, int j) {
    i64 total = 0;
    for (int i = 0; i <= ell; ++i) total += par_sign(i) * binom(ell, i) * vec_at(v, j - i);
    return total;
}

}  // namespace

FamilyReport verify_family(const PolytopeFamily& family) {
    FamilyReport rep;
    const int m = static_cast<int>(family.members.size());
    const int d = family.d;
    const std::vector<i64> alpha = family.vertex_counts();
    rep.m = m;
    rep.d = d;
    rep.alpha = alpha;

    CayleyData cd = cayley_complex(family);
    const i64 e = xi(alpha, d);
    const int D = static_cast<int>(e) + m - 1;
    const unsigned full = (1u << m) - 1;
    const bool pure = (e == d) && std::all_of(alpha.begin(), alpha.end(),
                                              [&](i64 a) { return a >= d + 1; });

    // per-mask relative and absolute h-vectors (intrinsic degree)
    std::map<unsigned, SubVectors> sub;
    std::map<unsigned, std::vector<i64>> abs_h;
    sub[0] = SubVectors{};
    for (unsigned mask = 1; mask <= full; ++mask) {
        SubVectors sv;
        const int s = popcount(mask);
        sv.a = subset_sum(alpha, mask);
        sv.e = std::min<i64>(d, sv.a - s);
        sv.D = cd.t_s.at(mask).dim() + 1;  // empirical stratum degree
        SimplicialComplex gamma;
        for (int i = 0; i < m; ++i)
            if (mask & (1u << i))
                gamma = SimplicialComplex::unite(gamma, cd.t_s.at(mask & ~(1u << i)));
        RelativeComplex rc(cd.t_s.at(mask), std::move(gamma));
        sv.h = fh_vectors(rc, sv.D).h;
        sv.htilde.resize(sv.D + 1);
        for (int j = 0; j <= sv.D; ++j)
            sv.htilde[j] = sv.h[j] + par_sign(j - s + 1) * binom(sv.D, j);
        abs_h[mask] = fh_vectors(RelativeComplex::absolute(cd.t_s.at(mask)), sv.D).h;
        sub[mask] = std::move(sv);
    }
    const SubVectors& top = sub.at(full);
    const std::vector<i64>& habs = abs_h.at(full);

    BoundTable table = mubt_table(alpha, d);

    auto add_check = [&](const std::string& name, bool pass, const std::string& details) {
        rep.checks.push_back(FamilyCheck{name, pass, false, details});
    };
    auto add_skip = [&](const std::string& name, const std::string& why) {
        rep.checks.push_back(FamilyCheck{name, true, true, why});
    };

    // stratum degree rule: deficient subfamilies span a simplex stratum of
    // degree ξ_S + |S|, all others sit at degree ξ_S + |S| - 1
    {
        bool ok = true;
        std::ostringstream det;
        for (unsigned mask = 1; mask <= full; ++mask) {
            const SubVectors& sv = sub.at(mask);
            const int s = popcount(mask);
            const int expected = static_cast<int>(sv.e) + s - (sv.e < e ? 0 : 1);
            if (sv.D != expected) {
                ok = false;
                det << "subfamily " << mask << " degree " << sv.D << " vs " << expected << "; ";
            }
        }
        add_check("stratum degree rule", ok, det.str());
    }

    // fiber f-identity: f_{k+m-1} of the relative Cayley complex equals f_k
    // of the Minkowski sum
    {
        MinkowskiSum ms = minkowski_sum(family);
        const std::vector<i64> fsum = ms.sum.f_vector();
        const std::vector<i64> frel = fh_vectors(cd.t_circ, D).f;
        bool ok = static_cast<int>(fsum.size()) == static_cast<int>(e);
        std::ostringstream det;
        for (int k = 0; ok && k < static_cast<int>(e); ++k)
            if (vec_at(frel, k + m) != fsum[k]) {
                ok = false;
                det << "mismatch at face dimension " << k;
            }
        add_check("fiber f-identity", ok, det.str());
    }

    // inclusion-exclusion h bound (stated for full-dimensional pure families)
    if (pure) {
        bool ok = true;
        std::ostringstream det;
        for (int j = 0; j <= D; ++j) {
            const i64 k = static_cast<i64>(j) - m + 1;
            i64 rhs = 0;
            for (unsigned mask = 0; mask <= full; ++mask)
                rhs += par_sign(m - popcount(mask)) *
                       gbinom(subset_sum(alpha, mask) - e + k - 1, j);
            if (vec_at(top.h, j) > rhs) {
                ok = false;
                det << "violated at index " << j << " (" << vec_at(top.h, j) << " > " << rhs
                    << "); ";
            }
        }
        add_check("inclusion-exclusion h bound", ok, det.str());
    } else {
        // initial terms: on the lower half the inclusion-exclusion over
        // nonempty subfamilies is an exact identity for h̃
        bool ok = true;
        std::ostringstream det;
        for (int j = 0; 2 * j <= D; ++j) {
            const i64 k = static_cast<i64>(j) - m + 1;
            i64 rhs = 0;
            for (unsigned mask = 1; mask <= full; ++mask)
                rhs += par_sign(m - popcount(mask)) *
                       gbinom(subset_sum(alpha, mask) - e + k - 1, j);
            if (vec_at(top.htilde, j) != rhs) {
                ok = false;
                det << "mismatch at index " << j << " (" << vec_at(top.htilde, j) << " vs "
                    << rhs << "); ";
            }
        }
        add_check("inclusion-exclusion h bound", ok, det.str());
    }

    // vertex-link step inequality
    {
        bool ok = true;
        std::ostringstream det;
        for (int idx = 1; idx <= D; ++idx) {  // idx = k + m
            const i64 lhs = static_cast<i64>(idx) * (vec_at(top.h, idx) - vec_at(top.h, idx - 1));
            i64 rhs = (subset_sum(alpha, full) - e - m) * vec_at(top.h, idx - 1);
            for (int i = 0; i < m; ++i) {
                i64 conv;
                if (m == 1) {
                    // the empty subfamily contributes the empty face alone
                    conv = par_sign(idx - 1) * binom(e, idx - 1);
                } else {
                    const SubVectors& sv = sub.at(full & ~(1u << i));
                    conv = vec_diff(sv.h, D - sv.D, idx - 1);
                }
                rhs += alpha[i] * conv;
            }
            if (lhs > rhs) {
                ok = false;
                det << "violated at index " << idx << " (" << lhs << " > " << rhs << "); ";
            }
        }
        add_check("vertex-link step inequality", ok, det.str());
    }

    // Dehn-Sommerville duality
    {
        bool ok = true;
        std::ostringstream det;
        for (i64 k = -m + 1; k <= e; ++k) {
            i64 corr = 0;
            for (unsigned mask = 1; mask < full; ++mask)
                if (sub.at(mask).e < e)
                    corr += par_sign(k + popcount(mask)) *
                            binom(D - sub.at(mask).a, k + m - 1);
            const i64 lhs = vec_at(habs, static_cast<int>(e - k));
            const i64 rhs = vec_at(top.htilde, static_cast<int>(k) + m - 1) + corr;
            if (lhs != rhs) {
                ok = false;
                det << "mismatch at k=" << k << " (" << lhs << " vs " << rhs << "); ";
            }
        }
        add_check("Dehn-Sommerville duality", ok, det.str());
    }

    // stratification identity
    {
        bool ok = true;
        std::ostringstream det;
        for (int j = 0; j <= D; ++j) {
            i64 rhs = 0;
            for (unsigned mask = 1; mask <= full; ++mask) {
                const SubVectors& sv = sub.at(mask);
                rhs += vec_diff(sv.htilde, D - sv.D, j);
            }
            if (vec_at(habs, j) != rhs) {
                ok = false;
                det << "mismatch at index " << j << "; ";
            }
        }
        add_check("stratification identity", ok, det.str());
    }

    // recursive decomposition (pure families)
    if (pure) {
        bool ok = true;
        std::ostringstream det;
        for (int j = 0; 2 * j <= D; ++j) {
            const int k = j - m + 1;
            const int c = c_clamp(k, m, d);
            mpq_class total = 0;
            for (int jj = 0; 2 * jj <= m; ++jj) {
                // sum (A)
                for (int s = std::max(1, c - 2 * jj + 1); s <= m - 2 * jj; ++s) {
                    for (unsigned mask = 1; mask <= full; ++mask) {
                        if (popcount(mask) != s) continue;
                        mpq_class inner = static_cast<long>(vec_at(sub.at(mask).htilde, j - 2 * jj));
                        mpq_class cover = 0;
                        for (int i = 0; i < m; ++i)
                            if (mask & (1u << i))
                                cover += static_cast<long>(
                                    vec_at(sub.at(mask & ~(1u << i)).htilde, j - 1 - 2 * jj));
                        inner -= cover / (2 * jj + 1);
                        total += static_cast<long>(binom(m - s, 2 * jj)) * inner;
                    }
                }
                // sum (B)
                const int s = c - 2 * jj;
                if (s >= 1) {
                    for (unsigned mask = 1; mask <= full; ++mask) {
                        if (popcount(mask) != s) continue;
                        mpq_class inner = static_cast<long>(vec_at(sub.at(mask).htilde, j - 2 * jj));
                        mpq_class cover = 0;
                        for (int i = 0; i < m; ++i)
                            if (mask & (1u << i))
                                cover += static_cast<long>(
                                    vec_at(sub.at(mask & ~(1u << i)).htilde, j - 1 - 2 * jj));
                        inner -= cover * (m - s) / ((m - s + 1) * (2 * jj + 1));
                        total += static_cast<long>(binom(m - s - 1, 2 * jj)) * inner;
                    }
                }
            }
            if (total != static_cast<long>(vec_at(habs, j))) {
                ok = false;
                det << "mismatch at index " << j << " (" << total.get_str() << " vs "
                    << vec_at(habs, j) << "); ";
            }
        }
        add_check("recursive decomposition", ok, det.str());
    } else {
        add_skip("recursive decomposition", "family is not pure and full-dimensional");
    }

    // interleaved g-inequality for delta in {0, 1, (d+1)/(d-1)}
    if (pure) {
        bool ok = true;
        std::ostringstream det;
        std::vector<mpq_class> deltas = {mpq_class(0), mpq_class(1)};
        if (d > 1) deltas.emplace_back(mpq_class(d + 1) / mpq_class(d - 1));
        for (const mpq_class& delta : deltas) {
            for (int j = 0; 2 * j <= D; ++j) {
                mpq_class lhs =
                    static_cast<long>(vec_at(top.htilde, j) - vec_at(top.htilde, j - 1));
                mpq_class rhs = static_cast<long>(table.htilde_diff(full, 1, j));
                for (int i = 0; i < m; ++i) {
                    const unsigned mask = full & ~(1u << i);
                    lhs -= delta * static_cast<long>(vec_diff(sub.at(mask).htilde, 1, j - 1));
                    rhs -= delta * static_cast<long>(table.htilde_diff(mask, 1, j - 1));
                }
                if (lhs > rhs) {
                    ok = false;
                    det << "violated at index " << j << " for delta=" << delta.get_str() << "; ";
                }
            }
        }
        add_check("interleaved g-inequality", ok, det.str());
    } else {
        add_skip("interleaved g-inequality", "family is not pure and full-dimensional");
    }

    // table domination
    {
        bool ok = true;
        std::ostringstream det;
        for (unsigned mask = 1; mask <= full; ++mask) {
            const SubVectors& sv = sub.at(mask);
            for (int j = 0; j <= sv.D; ++j) {
                if (sv.htilde[j] > table.htilde(mask, j)) {
                    ok = false;
                    det << "violated for subfamily " << mask << " at index " << j << " ("
                        << sv.htilde[j] << " > " << table.htilde(mask, j) << "); ";
                }
                if (mask == full && sv.htilde[j] == table.htilde(mask, j))
                    rep.tight_degrees.push_back(j);
            }
        }
        add_check("table domination", ok, det.str());
    }

    // mixed-face identities (pure families with at least two summands; a
    // single summand has no mixed decomposition)
    if (pure && m >= 2) {
        bool ok = true;
        std::ostringstream det;
        const std::vector<i64> fmix = mixed_faces(family);
        // facet inclusion-exclusion
        i64 ie = 0;
        for (unsigned mask = 1; mask <= full; ++mask) {
            PolytopeFamily subfam;
            subfam.d = d;
            for (int i = 0; i < m; ++i)
                if (mask & (1u << i)) subfam.members.push_back(family.members[i]);
            const std::vector<i64> f = minkowski_sum(subfam).sum.f_vector();
            ie += par_sign(m - popcount(mask)) * vec_at(f, d - 1);
        }
        if (vec_at(fmix, d - 1) != ie) {
            ok = false;
            det << "facet inclusion-exclusion mismatch (" << vec_at(fmix, d - 1) << " vs " << ie
                << "); ";
        }
        // mixed h-vector and its face bound
        std::vector<i64> hm(d + m, 0);
        const std::vector<i64> h_empty = {1};
        for (int j = 0; j < d + m; ++j) {
            hm[j] += par_sign(m) * vec_diff(h_empty, m, j - m);
            for (unsigned mask = 1; mask <= full; ++mask) {
                const int s = popcount(mask);
                hm[j] += par_sign(m - s) * vec_diff(sub.at(mask).h, m - s, j - m + s);
            }
        }
        for (int k = 0; k < d; ++k) {
            i64 fb = 0;
            for (int i = -m + 1; i <= d; ++i) fb += binom(d - i, k - i) * hm[i + m - 1];
            if (vec_at(fmix, k) > fb) {
                ok = false;
                det << "mixed f bound violated at dimension " << k << "; ";
            }
        }
        // domination by the table-based mixed bounds
        MixedBounds mb = mixed_bounds(alpha, d);
        for (int j = 0; j < d + m; ++j)
            if (hm[j] > mb.h_mix[j]) {
                ok = false;
                det << "mixed h bound violated at index " << j << " (" << hm[j] << " > "
                    << mb.h_mix[j] << "); ";
            }
        if (m < d) {
            for (int k = 0; k < d; ++k)
                if (vec_at(fmix, k) > mb.f_mix[k]) {
                    ok = false;
                    det << "table mixed f bound violated at dimension " << k << "; ";
                }
        }
        add_check("mixed-face identities", ok, det.str());
    } else {
        add_skip("mixed-face identities",
                 m < 2 ? "needs at least two summands" : "family is not pure and full-dimensional");
    }

    // non-face support diagnosis
    {
        int k0 = D + 1;
        for (unsigned mask = 1; mask <= full; ++mask) {
            const int s = popcount(mask);
            const SimplicialComplex& ts = cd.t_s.at(mask);
            const std::vector<int> verts = ts.vertices();
            const int nv = static_cast<int>(verts.size());
            if (nv > 24) throw std::invalid_argument("verify_family: too many vertices");
            std::vector<std::set<int>> supports;
            for (unsigned r = (mask - 1) & mask;; r = (r - 1) & mask) {
                if (r == 0) break;
                const std::vector<int> rv = cd.t_s.at(r).vertices();
                supports.emplace_back(rv.begin(), rv.end());
            }
            int min_dim = nv;  // the full vertex set is never a supported face
            for (unsigned vm = 1; vm < (1u << nv); ++vm) {
                const int size = popcount(vm);
                if (size - 1 >= min_dim) continue;
                Face face;
                for (int i = 0; i < nv; ++i)
                    if (vm & (1u << i)) face.push_back(verts[i]);
                if (ts.has_face(face)) continue;
                bool supported = false;
                for (const std::set<int>& sup : supports) {
                    bool inside = true;
                    for (int v : face)
                        if (!sup.count(v)) {
                            inside = false;
                            break;
                        }
                    if (inside) {
                        supported = true;
                        break;
                    }
                }
                if (!supported) min_dim = size - 1;
            }
            k0 = std::min(k0, min_dim - s + 1);
        }
        rep.nonface_support_k0 = k0;
    }

    rep.all_pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                               [](const FamilyCheck& c) { return c.pass; });
    return rep;
}

}  // namespace relsr
