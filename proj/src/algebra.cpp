#include "relsr/algebra.hpp"

#include <algorithm>
#include <random>

#include "relsr/homology.hpp"

namespace relsr {

namespace {

// Appends to out all exponent vectors of total degree deg supported exactly
// on the vertices of sigma (positive exponent on each), indices into vars.
void compositions(const std::vector<int>& positions, int n, int deg, std::size_t at,
                  std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (at + 1 == positions.size()) {
        current[positions[at]] = deg;  // remaining degree, necessarily >= 1
        out.push_back(current);
        current[positions[at]] = 0;
        return;
    }
    const int slots_left = static_cast<int>(positions.size() - at - 1);
    for (int e = 1; e + slots_left <= deg; ++e) {
        current[positions[at]] = e;
        compositions(positions, n, deg - e, at + 1, current, out);
    }
    current[positions[at]] = 0;
}

}  // namespace

GradedModule::GradedModule(RelativeComplex rc_in, int max_degree_in) : rc(std::move(rc_in)) {
    if (rc.delta.is_void()) throw std::invalid_argument("GradedModule: void complex");
    max_degree = max_degree_in >= 0 ? max_degree_in : rc.delta.dim() + 1;
    vars = rc.delta.vertices();
    std::map<int, int> var_index;
    for (int i = 0; i < n(); ++i) var_index[vars[i]] = i;

    basis.assign(max_degree + 1, {});
    index.assign(max_degree + 1, {});
    const std::vector<Face> faces = rc.faces();
    for (int k = 0; k <= max_degree; ++k) {
        std::vector<int> current(n(), 0);
        for (const Face& sigma : faces) {
            const int s = static_cast<int>(sigma.size());
            if (s == 0) {
                if (k == 0) basis[k].push_back(current);
                continue;
            }
            if (s > k) continue;
            std::vector<int> positions;
            positions.reserve(s);
            for (int v : sigma) positions.push_back(var_index.at(v));
            compositions(positions, n(), k, 0, current, basis[k]);
        }
        std::sort(basis[k].begin(), basis[k].end());
        for (std::size_t i = 0; i < basis[k].size(); ++i)
            index[k][basis[k][i]] = static_cast<int>(i);
    }
}

namespace {

// Facet-rank certification of a candidate system over the given field.
bool certify(const std::vector<std::vector<i64>>& theta, const std::vector<int>& vars,
             const SimplicialComplex& delta, const FieldSpec& field) {
    const int length = static_cast<int>(theta.size());
    if (length == 0) return true;
    std::map<int, int> var_index;
    for (std::size_t i = 0; i < vars.size(); ++i) var_index[vars[i]] = static_cast<int>(i);
    for (const Face& facet : delta.facets()) {
        const int want = std::min(length, static_cast<int>(facet.size()));
        std::vector<std::vector<i64>> sub(length, std::vector<i64>(facet.size()));
        for (int r = 0; r < length; ++r)
            for (std::size_t c = 0; c < facet.size(); ++c)
                sub[r][c] = theta[r][var_index.at(facet[c])];
        if (rank_over(sub, field) != want) return false;
    }
    return true;
}

// Seeded backtracking over whole coefficient columns for small prime fields:
// assigns one vertex column at a time, pruning as soon as every fully
// assigned facet violates the rank criterion.
bool backtrack_columns(std::vector<std::vector<i64>>& theta, const std::vector<int>& vars,
                       const SimplicialComplex& delta, const FieldSpec& field,
                       std::size_t col, std::mt19937_64& rng) {
    const int length = static_cast<int>(theta.size());
    if (col == vars.size()) return certify(theta, vars, delta, field);
    // candidate columns: all p^length vectors, in seeded random order
    i64 total = 1;
    for (int i = 0; i < length; ++i) total *= field.p;
    std::vector<i64> order(total);
    for (i64 i = 0; i < total; ++i) order[i] = i;
    std::shuffle(order.begin(), order.end(), rng);

    std::map<int, int> var_index;
    for (std::size_t i = 0; i < vars.size(); ++i) var_index[vars[i]] = static_cast<int>(i);

    for (i64 cand : order) {
        i64 code = cand;
        for (int r = 0; r < length; ++r) {
            theta[r][col] = code % field.p;
            code /= field.p;
        }
        // prune on facets fully contained in the assigned prefix
        bool ok = true;
        for (const Face& facet : delta.facets()) {
            bool complete = true;
            for (int v : facet)
                if (static_cast<std::size_t>(var_index.at(v)) > col) { complete = false; break; }
            if (!complete) continue;
            const int want = std::min(length, static_cast<int>(facet.size()));
            std::vector<std::vector<i64>> sub(length, std::vector<i64>(facet.size()));
            for (int r = 0; r < length; ++r)
                for (std::size_t c = 0; c < facet.size(); ++c)
                    sub[r][c] = theta[r][var_index.at(facet[c])];
            if (rank_over(sub, field) != want) { ok = false; break; }
        }
        if (ok && backtrack_columns(theta, vars, delta, field, col + 1, rng)) return true;
    }
    for (int r = 0; r < length; ++r) theta[r][col] = 0;
    return false;
}

}  // namespace

LinearSystem generic_lsop(const RelativeComplex& rc, int length, i64 seed,
                          const FieldSpec& field) {
    if (rc.delta.is_void()) throw std::invalid_argument("generic_lsop: void complex");
    if (length < 0) throw std::invalid_argument("generic_lsop: negative length");
    LinearSystem sys;
    sys.seed = seed;
    sys.field = field;
    const std::vector<int>& vars = rc.delta.vertices();
    const int n = static_cast<int>(vars.size());
    if (length == 0) {
        sys.certified = true;
        return sys;
    }

    std::mt19937_64 rng(static_cast<unsigned long long>(seed) * 0x9e3779b97f4a7c15ULL + 1);
    const int kRetries = 32;
    const bool small_field = field.kind == FieldSpec::Kind::prime && field.p <= 97;
    for (int attempt = 0; attempt < kRetries; ++attempt) {
        std::vector<std::vector<i64>> theta(length, std::vector<i64>(n));
        if (field.kind == FieldSpec::Kind::rationals) {
            std::uniform_int_distribution<i64> dist(-100000, 100000);
            for (auto& row : theta)
                for (i64& v : row) v = dist(rng);
        } else {
            std::uniform_int_distribution<i64> dist(0, field.p - 1);
            for (auto& row : theta)
                for (i64& v : row) v = dist(rng);
        }
        if (certify(theta, vars, rc.delta, field)) {
            sys.theta = std::move(theta);
            sys.certified = true;
            return sys;
        }
        // Small fields make random draws unreliable: after half the budget,
        // switch to an exhaustive seeded column search.
        if (small_field && attempt + 1 >= kRetries / 2) {
            i64 space = 1;
            bool feasible = true;
            for (int i = 0; i < length; ++i) {
                space *= field.p;
                if (space > 4096) { feasible = false; break; }
            }
            if (!feasible) break;
            std::vector<std::vector<i64>> bt(length, std::vector<i64>(n, 0));
            if (backtrack_columns(bt, vars, rc.delta, field, 0, rng)) {
                sys.theta = std::move(bt);
                sys.certified = true;
                return sys;
            }
            break;  // exhaustive search failed: no certified system exists
        }
    }
    throw std::runtime_error("generic_lsop: degenerate draws, no certified system found");
}

std::vector<i64> quotient_dims(const GradedModule& m, const LinearSystem& theta) {
    if (!theta.certified) throw std::invalid_argument("quotient_dims: uncertified system");
    std::vector<i64> out(m.max_degree + 1, 0);
    out[0] = m.dim_at(0);
    for (int k = 1; k <= m.max_degree; ++k) {
        const auto& low = m.basis[k - 1];
        const auto& idx = m.index[k];
        const i64 dim_k = m.dim_at(k);
        if (low.empty() || dim_k == 0) {
            out[k] = dim_k;
            continue;
        }
        std::vector<std::vector<i64>> rows;
        rows.reserve(theta.theta.size() * low.size());
        for (const auto& form : theta.theta) {
            for (const auto& mono : low) {
                std::vector<i64> row(dim_k, 0);
                bool nonzero = false;
                for (int v = 0; v < m.n(); ++v) {
                    if (form[v] == 0) continue;
                    std::vector<int> up = mono;
                    ++up[v];
                    auto it = idx.find(up);
                    if (it == idx.end()) continue;  // support left Δ∖Γ: zero in M
                    row[it->second] += form[v];
                    nonzero = true;
                }
                if (nonzero) rows.push_back(std::move(row));
            }
        }
        out[k] = dim_k - rank_over(rows, theta.field);
    }
    return out;
}

SchenzelResult schenzel_decompose(const RelativeComplex& rc, const FieldSpec& field, i64 seed) {
    SchenzelResult res;
    res.h_top = h_top(rc, field);  // verifies the Buchsbaum precondition
    const int d = rc.dim() + 1;
    res.h = fh_vectors(rc).h;
    GradedModule m(rc, d);
    LinearSystem sys = generic_lsop(rc, d, seed, field);
    res.h_alg = quotient_dims(m, sys);
    for (int k = 0; k <= d; ++k)
        if (res.h[k] != res.h_alg[k] + res.h_top[k])
            throw std::logic_error("schenzel_decompose: h != h_alg + h_top at degree " +
                                   std::to_string(k));
    return res;
}

i64 nerve_bound(const SimplicialComplex& delta, const Arrangement& arr, int k,
                const FieldSpec& field) {
    if (delta.is_void()) throw std::invalid_argument("nerve_bound: void complex");
    for (bool full : arr.fullness_flags())
        if (!full) throw std::invalid_argument("nerve_bound: arrangement is not full");
    const int d = delta.dim() + 1;

    const SimplicialComplex nerve = coarse_nerve(arr);
    const SimplicialComplex nerve_skel = nerve.skeleton(d);
    const SimplicialComplex ambient_skel =
        SimplicialComplex::full_simplex(delta.vertices()).skeleton(d);
    const RelativeComplex pair(ambient_skel, nerve_skel);
    if (pair.dim() != kDimVoid && !is_buchsbaum(pair, field))
        throw std::invalid_argument("nerve_bound: skeleton pair is not Buchsbaum");

    const IntersectionPoset poset = intersection_poset(arr);
    i64 base = 0;
    for (std::size_t i = 0; i < poset.elements.size(); ++i) {
        const i64 f0 = static_cast<i64>(poset.elements[i].vertices().size());
        base += poset.mobius[i] * gbinom(f0 - d + k - 1, k);
    }

    i64 correction = 0;
    if (!nerve_skel.is_void()) {
        const BettiTable b = betti(RelativeComplex::absolute(nerve_skel), field);
        for (int i = 0; i <= k - 1; ++i)
            correction += (((k - i) % 2 == 0) ? 1 : -1) * b.betti(i - 2);
    }
    return base - binom(d, k) * correction;
}

bool monotone_quotient_check(const RelativeComplex& rc, const SimplicialComplex& sub_delta,
                             const LinearSystem& theta, int k) {
    if (!sub_delta.is_subcomplex_of(rc.delta))
        throw std::invalid_argument("monotone_quotient_check: not a subcomplex");
    SimplicialComplex sub_gamma =
        rc.gamma.is_void() ? SimplicialComplex()
                           : SimplicialComplex::intersect(rc.gamma, sub_delta);
    RelativeComplex sub_rc(sub_delta, std::move(sub_gamma));

    GradedModule big(rc, k);
    GradedModule small(sub_rc, k);

    // restrict Θ to the variables of the subcomplex
    std::map<int, int> big_index;
    for (int i = 0; i < big.n(); ++i) big_index[big.vars[i]] = i;
    LinearSystem restricted;
    restricted.seed = theta.seed;
    restricted.field = theta.field;
    restricted.certified = true;  // inherited: same forms, fewer variables
    for (const auto& form : theta.theta) {
        std::vector<i64> row(small.n());
        for (int i = 0; i < small.n(); ++i) row[i] = form[big_index.at(small.vars[i])];
        restricted.theta.push_back(std::move(row));
    }

    const i64 lhs = quotient_dims(small, restricted)[k];
    const i64 rhs = quotient_dims(big, theta)[k];
    return lhs <= rhs;
}

SimplicialComplex boundary_complex(const SimplicialComplex& delta) {
    if (delta.is_void() || delta.dim() < 0) return SimplicialComplex();
    const int d = delta.dim() + 1;
    std::map<Face, int> count;
    for (const Face& facet : delta.facets()) {
        if (static_cast<int>(facet.size()) != d) continue;
        for (std::size_t skip = 0; skip < facet.size(); ++skip) {
            Face ridge;
            for (std::size_t i = 0; i < facet.size(); ++i)
                if (i != skip) ridge.push_back(facet[i]);
            ++count[ridge];
        }
    }
    std::vector<Face> boundary_faces;
    for (const auto& [ridge, c] : count)
        if (c == 1) boundary_faces.push_back(ridge);
    return SimplicialComplex::from_facets(std::move(boundary_faces));
}

bool reverse_iso_check(const SimplicialComplex& delta) {
    if (delta.is_void() || delta.dim() < 0)
        throw std::invalid_argument("reverse_iso_check: not a ball (trivial complex)");
    if (!delta.is_pure()) throw std::invalid_argument("reverse_iso_check: not a ball (not pure)");
    const RelativeComplex abs = RelativeComplex::absolute(delta);
    if (!is_cohen_macaulay(abs, FieldSpec::Q()))
        throw std::invalid_argument("reverse_iso_check: not a ball (not Cohen-Macaulay)");
    const BettiTable b = betti(abs, FieldSpec::Q());
    for (int i = -1; i <= delta.dim(); ++i)
        if (b.betti(i) != 0)
            throw std::invalid_argument("reverse_iso_check: not a ball (not acyclic)");
    const SimplicialComplex bd = boundary_complex(delta);
    if (bd.is_void())
        throw std::invalid_argument("reverse_iso_check: not a ball (no free ridges)");
    if (!is_full(delta, bd))
        throw std::invalid_argument("reverse_iso_check: boundary is not full");

    const int d = delta.dim() + 1;
    const std::vector<i64> h_rel = fh_vectors(RelativeComplex(delta, bd)).h;
    const std::vector<i64> h_bd = fh_vectors(RelativeComplex::absolute(bd)).h;
    for (int k = 1; k <= d; ++k) {
        const i64 lower = (k - 1 < static_cast<int>(h_bd.size())) ? h_bd[k - 1] : 0;
        if (h_rel[k] < lower) return false;
    }
    return true;
}

}  // namespace relsr
