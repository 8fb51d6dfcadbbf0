#include "relsr/homology.hpp"

#include <algorithm>

namespace relsr {

FieldSpec FieldSpec::GF(i64 prime) {
    if (!is_prime(prime)) throw std::invalid_argument("FieldSpec: not a prime");
    return {Kind::prime, prime};
}

FieldSpec FieldSpec::parse(const std::string& s) {
    if (s == "q" || s == "Q") return Q();
    if (s == "f2") return GF(2);
    if (s.rfind("fp:", 0) == 0) return GF(std::stoll(s.substr(3)));
    throw std::invalid_argument("unknown field spec: " + s);
}

std::string FieldSpec::name() const {
    if (kind == Kind::rationals) return "q";
    if (p == 2) return "f2";
    return "fp:" + std::to_string(p);
}

i64 inv_mod_p(i64 a, i64 p) {
    // extended Euclid
    i64 t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        i64 q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (r != 1) throw std::invalid_argument("inv_mod_p: not invertible");
    return ((t % p) + p) % p;
}

int rank_mod_p(std::vector<std::vector<i64>> m, i64 p) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] % p != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const i64 inv = inv_mod_p(((m[rank][c] % p) + p) % p, p);
        for (int cc = c; cc < cols; ++cc) m[rank][cc] = ((m[rank][cc] % p) * inv % p + p) % p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank) continue;
            const i64 factor = ((m[r][c] % p) + p) % p;
            if (factor == 0) continue;
            for (int cc = c; cc < cols; ++cc)
                m[r][cc] = ((m[r][cc] - factor * m[rank][cc]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

int rank_rational(std::vector<std::vector<mpq_class>> m) {
    const int rows = static_cast<int>(m.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(m[0].size());
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const mpq_class inv = 1 / m[rank][c];
        for (int cc = c; cc < cols; ++cc) m[rank][cc] *= inv;
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            const mpq_class factor = m[r][c];
            for (int cc = c; cc < cols; ++cc) m[r][cc] -= factor * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

int rank_over(const std::vector<std::vector<i64>>& m, const FieldSpec& field) {
    if (field.kind == FieldSpec::Kind::prime) return rank_mod_p(m, field.p);
    std::vector<std::vector<mpq_class>> q(m.size());
    for (std::size_t r = 0; r < m.size(); ++r) {
        q[r].reserve(m[r].size());
        for (i64 v : m[r]) q[r].emplace_back(static_cast<long>(v));
    }
    return rank_rational(std::move(q));
}

namespace {

// Faces of rc grouped by cardinality; groups[s] holds the cardinality-s faces.
std::vector<std::vector<Face>> faces_by_card(const RelativeComplex& rc) {
    const int dm = rc.dim();
    std::vector<std::vector<Face>> groups(dm == kDimVoid ? 0 : dm + 2);
    for (Face& f : rc.faces()) groups[f.size()].push_back(std::move(f));
    return groups;
}

// Boundary matrix from cardinality-s faces to cardinality-(s-1) faces,
// with zero columns for boundary faces that lie in Γ.
std::vector<std::vector<i64>> boundary_matrix(const std::vector<Face>& high,
                                              const std::vector<Face>& low) {
    std::map<Face, int> index;
    for (std::size_t i = 0; i < low.size(); ++i) index[low[i]] = static_cast<int>(i);
    std::vector<std::vector<i64>> m(high.size(), std::vector<i64>(low.size(), 0));
    for (std::size_t r = 0; r < high.size(); ++r) {
        const Face& f = high[r];
        for (std::size_t j = 0; j < f.size(); ++j) {
            Face g;
            for (std::size_t u = 0; u < f.size(); ++u)
                if (u != j) g.push_back(f[u]);
            auto it = index.find(g);
            if (it != index.end()) m[r][it->second] = (j % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

}  // namespace

BettiTable betti(const RelativeComplex& rc, const FieldSpec& field) {
    if (rc.delta.is_void()) throw std::invalid_argument("betti: void complex");
    BettiTable table;
    table.field = field;
    const int dm = rc.dim();
    if (dm == kDimVoid) return table;  // no relative faces: all Betti numbers 0
    auto groups = faces_by_card(rc);
    // ranks[s] = rank of the boundary map from cardinality-s to (s-1) chains
    std::vector<int> ranks(groups.size() + 1, 0);
    for (std::size_t s = 1; s < groups.size(); ++s) {
        if (groups[s].empty()) continue;
        ranks[s] = rank_over(boundary_matrix(groups[s], groups[s - 1]), field);
    }
    table.reduced_betti.assign(dm + 2, 0);
    for (std::size_t s = 0; s < groups.size(); ++s) {
        const i64 dim_c = static_cast<i64>(groups[s].size());
        table.reduced_betti[s] = dim_c - ranks[s] - (s + 1 < ranks.size() ? ranks[s + 1] : 0);
    }
    return table;
}

bool is_cohen_macaulay(const RelativeComplex& rc, const FieldSpec& field) {
    if (rc.delta.is_void()) throw std::invalid_argument("is_cohen_macaulay: void complex");
    for (const Face& sigma : rc.delta.all_faces()) {
        const RelativeComplex lk = rc.link(sigma);
        const int dl = lk.dim();
        if (dl == kDimVoid) continue;
        const BettiTable b = betti(lk, field);
        for (int i = -1; i < dl; ++i)
            if (b.betti(i) != 0) return false;
    }
    return true;
}

bool is_buchsbaum(const RelativeComplex& rc, const FieldSpec& field) {
    if (rc.delta.is_void()) throw std::invalid_argument("is_buchsbaum: void complex");
    if (!rc.is_pure()) throw std::invalid_argument("is_buchsbaum: non-pure complex");
    const int d = rc.dim() + 1;
    for (const Face& sigma : rc.delta.all_faces()) {
        if (sigma.empty()) continue;
        const RelativeComplex lk = rc.link(sigma);
        if (lk.dim() == kDimVoid) continue;
        const BettiTable b = betti(lk, field);
        const int bound = d - static_cast<int>(sigma.size()) - 1;  // dim Lk(σ, Δ) for pure Δ
        for (int i = -1; i < bound; ++i)
            if (b.betti(i) != 0) return false;
    }
    return true;
}

std::map<int, i64> local_cohomology_hilbert(const RelativeComplex& rc, const FieldSpec& field,
                                            int i, int max_shift) {
    if (rc.delta.is_void()) throw std::invalid_argument("local_cohomology_hilbert: void complex");
    if (max_shift < 0) max_shift = rc.delta.dim() + 2;
    std::map<int, i64> out;
    for (const Face& sigma : rc.delta.all_faces()) {
        const int s = static_cast<int>(sigma.size());
        const RelativeComplex lk = rc.link(sigma);
        if (lk.delta.is_void()) continue;
        const i64 b = betti(lk, field).betti(i - s - 1);  // β̃_{i - dim σ - 2}
        if (b == 0) continue;
        if (s == 0) {
            out[0] += b;  // σ = ∅ contributes only in degree 0
            continue;
        }
        // α strictly negative on σ with |α| = j: C(j-1, s-1) choices.
        for (int j = s; j <= max_shift; ++j) out[-j] += b * binom(j - 1, s - 1);
    }
    return out;
}

std::vector<i64> h_top(const RelativeComplex& rc, const FieldSpec& field) {
    if (!is_buchsbaum(rc, field)) throw std::invalid_argument("h_top: complex is not Buchsbaum");
    const int d = rc.dim() + 1;
    const BettiTable b = betti(rc, field);
    std::vector<i64> out(d + 1, 0);
    for (int k = 1; k <= d; ++k) {
        i64 s = 0;
        for (int i = 0; i <= k - 1; ++i)
            s += (((k - i) % 2 == 0) ? 1 : -1) * b.betti(i - 1);
        out[k] = binom(d, k) * s;
    }
    return out;
}

CoverQuality cover_quality(const SimplicialComplex& delta, const Arrangement& arr, int ell,
                           const FieldSpec& field) {
    const int m = static_cast<int>(arr.members.size());
    if (m > 20) throw std::invalid_argument("cover_quality: too many members");

    // (Δ', members') is ell'-good iff for every t-subset,
    // (Δ', Δ' ∩ ∩Γ_i) is (ell'-t)-acyclic.
    auto is_good = [&field](const SimplicialComplex& amb,
                            const std::vector<SimplicialComplex>& members, int lvl) {
        const int mm = static_cast<int>(members.size());
        for (unsigned mask = 1; mask < (1u << mm); ++mask) {
            int t = __builtin_popcount(mask);
            SimplicialComplex inter;
            bool first = true;
            for (int i = 0; i < mm; ++i) {
                if (!(mask & (1u << i))) continue;
                inter = first ? members[i] : SimplicialComplex::intersect(inter, members[i]);
                first = false;
            }
            SimplicialComplex g = SimplicialComplex::intersect(amb, inter);
            // A bare {∅} intersection realizes the empty space: use the void
            // subcomplex so the pair computes reduced homology.
            if (g.is_empty_complex()) g = SimplicialComplex();
            const RelativeComplex pair(amb, std::move(g));
            if (pair.dim() == kDimVoid) continue;
            const BettiTable b = betti(pair, field);
            for (int j = -1; j < lvl - t; ++j)
                if (b.betti(j) != 0) return false;
        }
        return true;
    };

    CoverQuality q;
    q.is_good = is_good(delta, arr.members, ell);
    q.is_magnificent = true;
    for (const Face& sigma : delta.all_faces()) {
        const SimplicialComplex lk = delta.link(sigma);
        std::vector<SimplicialComplex> restricted;
        restricted.reserve(arr.members.size());
        for (const SimplicialComplex& g : arr.members)
            restricted.push_back(SimplicialComplex::intersect(lk, g));
        const int lvl = ell - (static_cast<int>(sigma.size()) - 1) - 1;
        if (!is_good(lk, restricted, lvl)) {
            q.is_magnificent = false;
            break;
        }
    }
    return q;
}

}  // namespace relsr
