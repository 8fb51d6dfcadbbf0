#include "relsr/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace relsr {
namespace {

// Order faces by (cardinality, lexicographic).
bool face_less(const Face& a, const Face& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

bool is_subset(const Face& a, const Face& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

SimplicialComplex SimplicialComplex::empty_complex() {
    return from_facets({Face{}});
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> facet_lists) {
    SimplicialComplex c;
    if (facet_lists.empty()) return c;  // void
    for (Face& f : facet_lists) {
        std::sort(f.begin(), f.end());
        if (std::adjacent_find(f.begin(), f.end()) != f.end())
            throw std::invalid_argument("malformed face: repeated vertex");
        if (!f.empty() && f.front() < 0)
            throw std::invalid_argument("malformed face: negative vertex id");
    }
    std::sort(facet_lists.begin(), facet_lists.end(), face_less);
    facet_lists.erase(std::unique(facet_lists.begin(), facet_lists.end()), facet_lists.end());
    // Remove dominated faces (faces sorted by size, so dominators come later).
    std::vector<Face> kept;
    for (std::size_t i = 0; i < facet_lists.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = i + 1; j < facet_lists.size() && !dominated; ++j)
            dominated = is_subset(facet_lists[i], facet_lists[j]);
        if (!dominated) kept.push_back(facet_lists[i]);
    }
    c.is_void_ = false;
    c.facets_ = std::move(kept);
    std::set<int> vs;
    for (const Face& f : c.facets_) vs.insert(f.begin(), f.end());
    c.vertices_.assign(vs.begin(), vs.end());
    return c;
}

SimplicialComplex SimplicialComplex::full_simplex(Face vertices) {
    return from_facets({std::move(vertices)});
}

int SimplicialComplex::dim() const {
    if (is_void_) return kDimVoid;
    return static_cast<int>(facets_.back().size()) - 1;
}

bool SimplicialComplex::has_face(const Face& sigma) const {
    if (is_void_) return false;
    for (const Face& f : facets_)
        if (is_subset(sigma, f)) return true;
    return false;
}

std::vector<Face> SimplicialComplex::all_faces() const {
    std::set<Face, decltype(&face_less)> faces(&face_less);
    for (const Face& f : facets_) {
        const int n = static_cast<int>(f.size());
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            Face g;
            for (int b = 0; b < n; ++b)
                if (mask & (1u << b)) g.push_back(f[b]);
            faces.insert(std::move(g));
        }
    }
    return {faces.begin(), faces.end()};
}

std::vector<i64> SimplicialComplex::face_counts() const {
    if (is_void_) return {};
    std::vector<i64> counts(dim() + 2, 0);
    for (const Face& g : all_faces()) ++counts[g.size()];
    return counts;
}

SimplicialComplex SimplicialComplex::link(const Face& sigma) const {
    if (!has_face(sigma)) return SimplicialComplex();  // void
    std::vector<Face> fs;
    for (const Face& f : facets_) {
        if (!is_subset(sigma, f)) continue;
        Face g;
        std::set_difference(f.begin(), f.end(), sigma.begin(), sigma.end(), std::back_inserter(g));
        fs.push_back(std::move(g));
    }
    if (fs.empty()) fs.push_back({});
    return from_facets(std::move(fs));
}

SimplicialComplex SimplicialComplex::star(const Face& sigma) const {
    if (!has_face(sigma)) return SimplicialComplex();  // void
    std::vector<Face> fs;
    for (const Face& f : facets_)
        if (is_subset(sigma, f)) fs.push_back(f);
    return from_facets(std::move(fs));
}

SimplicialComplex SimplicialComplex::deletion(const Face& sigma) const {
    if (is_void_) return SimplicialComplex();
    if (sigma.empty()) return SimplicialComplex();  // every face contains ∅
    std::vector<Face> fs;
    for (const Face& f : facets_) {
        if (!is_subset(sigma, f)) {
            fs.push_back(f);
            continue;
        }
        for (int v : sigma) {
            Face g;
            for (int u : f)
                if (u != v) g.push_back(u);
            fs.push_back(std::move(g));
        }
    }
    if (fs.empty()) return SimplicialComplex();
    return from_facets(std::move(fs));
}

SimplicialComplex SimplicialComplex::skeleton(int i) const {
    if (is_void_ || i < 0) return SimplicialComplex();
    std::vector<Face> fs;
    for (const Face& f : facets_) {
        const int n = static_cast<int>(f.size());
        if (n <= i) {
            fs.push_back(f);
            continue;
        }
        // all i-subsets of f
        Face idx(i);
        std::iota(idx.begin(), idx.end(), 0);
        while (true) {
            Face g(i);
            for (int b = 0; b < i; ++b) g[b] = f[idx[b]];
            fs.push_back(std::move(g));
            int b = i - 1;
            while (b >= 0 && idx[b] == n - i + b) --b;
            if (b < 0) break;
            ++idx[b];
            for (int c = b + 1; c < i; ++c) idx[c] = idx[c - 1] + 1;
        }
        if (i == 0) fs.push_back({});
    }
    if (fs.empty()) fs.push_back({});
    return from_facets(std::move(fs));
}

SimplicialComplex SimplicialComplex::restriction(const Face& w) const {
    if (is_void_) return SimplicialComplex();
    Face ws = w;
    std::sort(ws.begin(), ws.end());
    std::vector<Face> fs;
    for (const Face& f : facets_) {
        Face g;
        std::set_intersection(f.begin(), f.end(), ws.begin(), ws.end(), std::back_inserter(g));
        fs.push_back(std::move(g));
    }
    return from_facets(std::move(fs));
}

bool SimplicialComplex::is_subcomplex_of(const SimplicialComplex& other) const {
    if (is_void_) return true;
    for (const Face& f : facets_)
        if (!other.has_face(f)) return false;
    return true;
}

bool SimplicialComplex::is_pure() const {
    if (is_void_) return true;
    return facets_.front().size() == facets_.back().size();
}

SimplicialComplex SimplicialComplex::intersect(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.is_void_ || b.is_void_) return SimplicialComplex();
    std::vector<Face> fs;
    for (const Face& f : a.facets_)
        for (const Face& g : b.facets_) {
            Face h;
            std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(h));
            fs.push_back(std::move(h));
        }
    return from_facets(std::move(fs));
}

SimplicialComplex SimplicialComplex::unite(const SimplicialComplex& a, const SimplicialComplex& b) {
    if (a.is_void_) return b;
    if (b.is_void_) return a;
    std::vector<Face> fs = a.facets_;
    fs.insert(fs.end(), b.facets_.begin(), b.facets_.end());
    return from_facets(std::move(fs));
}

RelativeComplex::RelativeComplex(SimplicialComplex d, SimplicialComplex g)
    : delta(std::move(d)), gamma(std::move(g)) {
    if (!gamma.is_subcomplex_of(delta))
        throw std::invalid_argument("gamma is not a subcomplex of delta");
}

std::vector<Face> RelativeComplex::faces() const {
    std::vector<Face> out;
    for (Face& f : delta.all_faces())
        if (!gamma.has_face(f)) out.push_back(std::move(f));
    return out;
}

int RelativeComplex::dim() const {
    int d = kDimVoid;
    if (delta.is_void()) return d;
    for (const Face& f : delta.facets())
        if (!gamma.has_face(f)) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

bool RelativeComplex::is_pure() const {
    const int dm = dim();
    if (dm == kDimVoid) return true;
    for (const Face& f : delta.facets())
        if (!gamma.has_face(f) && static_cast<int>(f.size()) - 1 != dm) return false;
    return true;
}

std::vector<i64> f_to_h(const std::vector<i64>& f, int d) {
    std::vector<i64> h(d + 1, 0);
    for (int k = 0; k <= d; ++k)
        for (int i = 0; i <= k; ++i) {
            const i64 c = binom(d - i, k - i) * (i64)((k - i) % 2 == 0 ? 1 : -1);
            h[k] += c * (i < static_cast<int>(f.size()) ? f[i] : 0);
        }
    return h;
}

std::vector<i64> h_to_f(const std::vector<i64>& h, int d) {
    std::vector<i64> f(d + 1, 0);
    for (int i = 0; i <= d; ++i)
        for (int k = 0; k <= i; ++k)
            f[i] += binom(d - k, i - k) * (k < static_cast<int>(h.size()) ? h[k] : 0);
    return f;
}

FHVectors fh_vectors(const RelativeComplex& rc, std::optional<int> d_override) {
    if (rc.delta.is_void())
        throw std::invalid_argument("fh_vectors: void complex");
    const int dm = rc.dim();
    const int d_min = (dm == kDimVoid) ? 0 : dm + 1;
    const int d = d_override.value_or(d_min);
    if (d < d_min) throw std::invalid_argument("fh_vectors: d_override below dim+1");
    FHVectors out;
    out.d = d;
    out.f.assign(d + 1, 0);
    for (const Face& g : rc.faces()) ++out.f[g.size()];
    out.h = f_to_h(out.f, d);
    out.g.assign(d + 1, 0);
    for (int k = 0; k <= d; ++k) out.g[k] = out.h[k] - (k > 0 ? out.h[k - 1] : 0);
    out.chi = ((d - 1) % 2 == 0 ? 1 : -1) * out.h[d];
    return out;
}

std::vector<i64> hilbert_numerator(const RelativeComplex& rc, int ell, int max_degree) {
    if (rc.delta.is_void())
        throw std::invalid_argument("hilbert_numerator: void complex");
    if (ell < 0) throw std::invalid_argument("hilbert_numerator: ell < 0");
    std::vector<i64> counts((rc.dim() == kDimVoid ? 0 : rc.dim() + 1) + 1, 0);
    for (const Face& g : rc.faces()) ++counts[g.size()];
    std::vector<i64> out(max_degree + 1, 0);
    for (int i = 0; i <= max_degree; ++i)
        for (int s = 0; s < static_cast<int>(counts.size()); ++s) {
            if (s > i || counts[s] == 0) continue;
            const i64 sign = ((i - s) % 2 == 0) ? 1 : -1;
            out[i] += counts[s] * sign * gbinom(ell - s, i - s);
        }
    return out;
}

bool is_full(const SimplicialComplex& delta, const SimplicialComplex& gamma) {
    if (!gamma.is_subcomplex_of(delta))
        throw std::invalid_argument("is_full: gamma is not a subcomplex of delta");
    if (gamma.is_void()) return false;
    Face w(gamma.vertices().begin(), gamma.vertices().end());
    return delta.restriction(w) == gamma;
}

Arrangement::Arrangement(SimplicialComplex amb, std::vector<SimplicialComplex> mem)
    : ambient(std::move(amb)), members(std::move(mem)) {
    for (const SimplicialComplex& m : members)
        if (!m.is_subcomplex_of(ambient))
            throw std::invalid_argument("arrangement member is not a subcomplex of the ambient complex");
}

SimplicialComplex Arrangement::support() const {
    SimplicialComplex u;
    for (const SimplicialComplex& m : members) u = SimplicialComplex::unite(u, m);
    return u;
}

std::vector<bool> Arrangement::fullness_flags() const {
    std::vector<bool> flags;
    flags.reserve(members.size());
    for (const SimplicialComplex& m : members) flags.push_back(is_full(ambient, m));
    return flags;
}

IntersectionPoset intersection_poset(const Arrangement& arr) {
    const int m = static_cast<int>(arr.members.size());
    if (m > 20) throw std::invalid_argument("intersection_poset: too many members");
    IntersectionPoset poset;
    poset.elements.push_back(arr.ambient);
    for (unsigned mask = 1; mask < (1u << m); ++mask) {
        SimplicialComplex p;
        bool first = true;
        for (int i = 0; i < m; ++i) {
            if (!(mask & (1u << i))) continue;
            p = first ? arr.members[i] : SimplicialComplex::intersect(p, arr.members[i]);
            first = false;
        }
        bool seen = false;
        for (const SimplicialComplex& q : poset.elements)
            if (q == p) { seen = true; break; }
        if (!seen) poset.elements.push_back(std::move(p));
    }
    // Möbius from the minimum Δ: μ(Δ) = 1, μ(p) = -Σ_{q ⊋ p} μ(q) where q
    // ranges over poset elements strictly containing p (reverse inclusion).
    const std::size_t n = poset.elements.size();
    poset.mobius.assign(n, 0);
    // Topological order: process elements from largest face set downward.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto size_key = [&](std::size_t i) {
        const auto& e = poset.elements[i];
        return e.is_void() ? static_cast<i64>(-1) : static_cast<i64>(e.all_faces().size());
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return size_key(a) > size_key(b); });
    for (std::size_t oi = 0; oi < n; ++oi) {
        const std::size_t i = order[oi];
        if (i == 0) { poset.mobius[0] = 1; continue; }
        i64 s = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (poset.elements[i].is_subcomplex_of(poset.elements[j]) &&
                !(poset.elements[j] == poset.elements[i]))
                s += poset.mobius[j];
        }
        poset.mobius[i] = -s;
    }
    return poset;
}

SimplicialComplex coarse_nerve(const Arrangement& arr) {
    std::vector<Face> fs;
    for (const SimplicialComplex& m : arr.members) {
        if (m.is_void()) continue;
        fs.push_back(Face(m.vertices().begin(), m.vertices().end()));
    }
    if (fs.empty()) return SimplicialComplex();
    return SimplicialComplex::from_facets(std::move(fs));
}

ShellingResult verify_relative_shelling(const RelativeComplex& rc, const std::vector<Face>& facet_order) {
    ShellingResult res;
    // The order must enumerate exactly the facets of Δ outside Γ.
    std::vector<Face> expected;
    for (const Face& f : rc.delta.facets())
        if (!rc.gamma.has_face(f)) expected.push_back(f);
    std::vector<Face> given = facet_order;
    for (Face& f : given) std::sort(f.begin(), f.end());
    std::vector<Face> sorted_given = given;
    std::sort(sorted_given.begin(), sorted_given.end(), face_less);
    std::sort(expected.begin(), expected.end(), face_less);
    if (sorted_given != expected)
        throw std::invalid_argument("facet_order must list exactly the facets of delta outside gamma");

    const int dm = rc.dim();
    res.h.assign(dm == kDimVoid ? 1 : dm + 2, 0);
    SimplicialComplex current = rc.gamma;
    for (std::size_t step = 0; step < given.size(); ++step) {
        const Face& f = given[step];
        const int n = static_cast<int>(f.size());
        // restriction face r(F) = {v ∈ F : F∖v already present}
        Face r;
        for (int v : f) {
            Face g;
            for (int u : f)
                if (u != v) g.push_back(u);
            if (current.has_face(g)) r.push_back(v);
        }
        // Validity: a subset G ⊆ F is already present iff it does not contain r.
        bool ok = true;
        for (unsigned mask = 0; mask < (1u << n) && ok; ++mask) {
            Face g;
            for (int b = 0; b < n; ++b)
                if (mask & (1u << b)) g.push_back(f[b]);
            const bool present = current.has_face(g);
            const bool contains_r = is_subset(r, g);
            if (present == contains_r) ok = false;
        }
        if (!ok) {
            res.ok = false;
            res.failing_step = static_cast<int>(step);
            return res;
        }
        ++res.h[r.size()];
        current = SimplicialComplex::unite(current, SimplicialComplex::from_facets({f}));
    }
    res.ok = true;
    return res;
}

i64 euler_characteristic(const RelativeComplex& rc) {
    i64 chi = 0;
    for (const Face& g : rc.faces()) chi += (g.size() % 2 == 0) ? -1 : 1;
    return chi;
}

bool is_eulerian(const RelativeComplex& rc, bool weak) {
    if (!weak && !rc.is_pure()) return false;
    for (const Face& sigma : rc.faces()) {
        if (weak && sigma.empty()) continue;
        const RelativeComplex lk = rc.link(sigma);
        const int dm = lk.dim();
        if (dm == kDimVoid) return false;
        const i64 want = (dm % 2 == 0) ? 1 : -1;
        if (euler_characteristic(lk) != want) return false;
    }
    return true;
}

}  // namespace relsr
