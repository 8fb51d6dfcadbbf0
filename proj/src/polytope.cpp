#include "relsr/polytope.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace relsr {

namespace {

struct HFacet {
    Vec normal;  // outer: normal·x <= offset, equality on the facet
    mpq_class offset;
    std::vector<int> tight;  // ids of all points on the hyperplane
};

Mat diffs_of(const Mat& pts, const std::vector<int>& ids) {
    Mat d;
    if (ids.empty()) return d;
    const Vec& base = pts[ids[0]];
    for (std::size_t i = 1; i < ids.size(); ++i) {
        Vec row(base.size());
        for (std::size_t c = 0; c < base.size(); ++c) row[c] = pts[ids[i]][c] - base[c];
        d.push_back(std::move(row));
    }
    return d;
}

// Greedy selection of a coordinate subset on which the given directions have
// full rank; used to reduce to a full-dimensional coordinate chart.
std::vector<int> spanning_columns(const Mat& dirs, int cols) {
    std::vector<int> chosen;
    for (int c = 0; c < cols; ++c) {
        std::vector<int> cand = chosen;
        cand.push_back(c);
        Mat restricted(dirs.size());
        for (std::size_t r = 0; r < dirs.size(); ++r)
            for (int cc : cand) restricted[r].push_back(dirs[r][cc]);
        if (mat_rank(std::move(restricted)) > static_cast<int>(chosen.size()))
            chosen.push_back(c);
    }
    return chosen;
}

std::vector<HFacet> hull_facets(const Mat& q, int k);

// Exhaustive supporting-hyperplane search over k-subsets.
std::vector<HFacet> hull_facets_exhaustive(const Mat& q, int k) {
    const int n = static_cast<int>(q.size());
    std::vector<HFacet> out;
    std::set<std::vector<int>> seen;
    std::vector<int> subset(k);
    std::iota(subset.begin(), subset.end(), 0);
    auto advance = [&]() {
        int i = k - 1;
        while (i >= 0 && subset[i] == n - k + i) --i;
        if (i < 0) return false;
        ++subset[i];
        for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
        return true;
    };
    do {
        Mat ns = nullspace(diffs_of(q, subset), k);
        if (ns.size() != 1) continue;  // affinely degenerate subset
        Vec a = std::move(ns[0]);
        const mpq_class b0 = dot(a, q[subset[0]]);
        bool pos = false, neg = false;
        for (int p = 0; p < n; ++p) {
            const int s = cmp(dot(a, q[p]), b0);
            if (s > 0) pos = true;
            if (s < 0) neg = true;
            if (pos && neg) break;
        }
        if (pos && neg) continue;
        if (pos)
            for (mpq_class& v : a) v = -v;
        const mpq_class b = dot(a, q[subset[0]]);
        HFacet f;
        for (int p = 0; p < n; ++p)
            if (dot(a, q[p]) == b) f.tight.push_back(p);
        if (seen.insert(f.tight).second) {
            f.normal = std::move(a);
            f.offset = b;
            out.push_back(std::move(f));
        }
    } while (advance());
    return out;
}

// A vector in the nullspace basis that is linearly independent from u.
Vec independent_direction(const Mat& basis, const Vec& u) {
    for (const Vec& w : basis) {
        Mat pair = {u, w};
        if (mat_rank(pair) == 2) return w;
    }
    throw std::logic_error("hull: no independent rotation direction");
}

// Rotates the supporting hyperplane (u, alpha) around the affine hull of the
// tight set in direction w until it hits new points.  Returns the new facet
// data; tight set recomputed from scratch.
void rotate_to(const Mat& q, Vec& u, mpq_class& alpha, Vec w, const Vec& base) {
    const int n = static_cast<int>(q.size());
    // w vanishes on the current tight set; rotate toward positive w
    bool any_pos = false;
    const mpq_class wbase = dot(w, base);
    for (int p = 0; p < n && !any_pos; ++p)
        if (dot(w, q[p]) > wbase) any_pos = true;
    if (!any_pos)
        for (mpq_class& v : w) v = -v;

    bool have = false;
    mpq_class best;  // t* = min alpha_p / gamma_p over gamma_p > 0
    const mpq_class wb = dot(w, base);
    for (int p = 0; p < n; ++p) {
        const mpq_class gamma = dot(w, q[p]) - wb;
        if (gamma <= 0) continue;
        const mpq_class t = (alpha - dot(u, q[p])) / gamma;
        if (!have || t < best) { best = t; have = true; }
    }
    if (!have) throw std::logic_error("hull: rotation unbounded (points not full-dimensional)");
    for (std::size_t c = 0; c < u.size(); ++c) u[c] += best * w[c];
    alpha = dot(u, base);
}

std::vector<int> tight_set(const Mat& q, const Vec& u, const mpq_class& alpha) {
    std::vector<int> t;
    for (std::size_t p = 0; p < q.size(); ++p)
        if (dot(u, q[p]) == alpha) t.push_back(static_cast<int>(p));
    return t;
}

HFacet initial_facet(const Mat& q, int k) {
    Vec u(k, 0);
    u[0] = 1;
    mpq_class alpha = dot(u, q[0]);
    for (const Vec& p : q) alpha = std::max(alpha, dot(u, p));
    std::vector<int> tight = tight_set(q, u, alpha);
    while (affine_rank(q, tight) < k - 1) {
        Mat ns = nullspace(diffs_of(q, tight), k);
        Vec w = independent_direction(ns, u);
        rotate_to(q, u, alpha, std::move(w), q[tight[0]]);
        tight = tight_set(q, u, alpha);
    }
    return {std::move(u), std::move(alpha), std::move(tight)};
}

// Ridges of a facet: the facets of the hull of its tight set, computed
// recursively in a spanning coordinate chart.  Returns global point ids.
std::vector<std::vector<int>> facet_ridges(const Mat& q, int k, const HFacet& f) {
    if (static_cast<int>(f.tight.size()) == k) {  // simplex facet
        std::vector<std::vector<int>> out;
        for (std::size_t skip = 0; skip < f.tight.size(); ++skip) {
            std::vector<int> r;
            for (std::size_t i = 0; i < f.tight.size(); ++i)
                if (i != skip) r.push_back(f.tight[i]);
            out.push_back(std::move(r));
        }
        return out;
    }
    Mat dirs = diffs_of(q, f.tight);
    std::vector<int> cols = spanning_columns(dirs, k);  // k-1 columns
    Mat sub;
    for (int id : f.tight) {
        Vec row;
        for (int c : cols) row.push_back(q[id][c]);
        sub.push_back(std::move(row));
    }
    std::vector<std::vector<int>> out;
    for (const HFacet& r : hull_facets(sub, k - 1)) {
        std::vector<int> global;
        for (int local : r.tight) global.push_back(f.tight[local]);
        std::sort(global.begin(), global.end());
        out.push_back(std::move(global));
    }
    return out;
}

std::vector<HFacet> hull_facets_giftwrap(const Mat& q, int k) {
    std::vector<HFacet> out;
    std::set<std::vector<int>> seen;
    std::vector<HFacet> queue{initial_facet(q, k)};
    seen.insert(queue[0].tight);
    while (!queue.empty()) {
        HFacet f = std::move(queue.back());
        queue.pop_back();
        for (const std::vector<int>& ridge : facet_ridges(q, k, f)) {
            // pivot around the ridge away from f
            Mat ns = nullspace(diffs_of(q, ridge), k);  // 2-dimensional
            Vec w = independent_direction(ns, f.normal);
            const Vec& base = q[ridge[0]];
            // orient w negatively on the rest of the facet
            int sign = 0;
            for (int id : f.tight) {
                sign = cmp(dot(w, q[id]), dot(w, base));
                if (sign != 0) break;
            }
            if (sign > 0)
                for (mpq_class& v : w) v = -v;
            const mpq_class wb = dot(w, base);
            Vec u = f.normal;
            mpq_class alpha = f.offset;
            // t* = min over gamma_p > 0 of (alpha - u·p)/gamma_p
            bool have = false;
            mpq_class best;
            for (std::size_t p = 0; p < q.size(); ++p) {
                const mpq_class gamma = dot(w, q[p]) - wb;
                if (gamma <= 0) continue;
                const mpq_class t = (alpha - dot(u, q[p])) / gamma;
                if (!have || t < best) { best = t; have = true; }
            }
            if (have) {
                for (std::size_t c = 0; c < u.size(); ++c) u[c] += best * w[c];
                alpha = dot(u, base);
            } else {
                // w supports the polytope through the ridge alone; the
                // rotation continues past w, opening against u:
                // n_t = w - t u, first touch at t* = min (wb - w p)/(alpha - u p)
                bool have2 = false;
                mpq_class best2;
                for (std::size_t p = 0; p < q.size(); ++p) {
                    const mpq_class gap = alpha - dot(u, q[p]);
                    if (gap <= 0) continue;
                    const mpq_class t = (wb - dot(w, q[p])) / gap;
                    if (!have2 || t < best2) { best2 = t; have2 = true; }
                }
                if (!have2) throw std::logic_error("hull: open ridge pivot");
                for (std::size_t c = 0; c < u.size(); ++c) u[c] = w[c] - best2 * u[c];
                alpha = dot(u, base);
            }
            std::vector<int> tight = tight_set(q, u, alpha);
            HFacet g{std::move(u), std::move(alpha), std::move(tight)};
            if (seen.insert(g.tight).second) queue.push_back(std::move(g));
        }
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<HFacet> hull_facets(const Mat& q, int k) {
    const int n = static_cast<int>(q.size());
    // choose exhaustive search while C(n,k) stays desk-sized
    double combos = 1;
    for (int i = 0; i < k; ++i) combos *= static_cast<double>(n - i) / (i + 1);
    if (combos <= 20000.0) return hull_facets_exhaustive(q, k);
    return hull_facets_giftwrap(q, k);
}

}  // namespace

const std::vector<PolytopeFace>& RationalPolytope::face_lattice() const {
    if (lattice_ready_) return lattice_;
    std::set<std::vector<int>> sets;
    for (const PolytopeFace& f : facets) sets.insert(f.vertex_ids);
    // closure under pairwise intersection
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> current(sets.begin(), sets.end());
        for (std::size_t i = 0; i < current.size(); ++i)
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                std::vector<int> inter;
                std::set_intersection(current[i].begin(), current[i].end(), current[j].begin(),
                                      current[j].end(), std::back_inserter(inter));
                if (!inter.empty() && sets.insert(inter).second) grew = true;
            }
    }
    for (const std::vector<int>& s : sets) {
        PolytopeFace f;
        f.vertex_ids = s;
        f.dim = affine_rank(vertices, s);
        lattice_.push_back(std::move(f));
    }
    std::sort(lattice_.begin(), lattice_.end(), [](const PolytopeFace& a, const PolytopeFace& b) {
        return a.dim != b.dim ? a.dim < b.dim : a.vertex_ids < b.vertex_ids;
    });
    lattice_ready_ = true;
    return lattice_;
}

std::vector<i64> RationalPolytope::f_vector() const {
    std::vector<i64> f(std::max(dim, 0), 0);
    for (const PolytopeFace& face : face_lattice()) ++f[face.dim];
    return f;
}

RationalPolytope convex_hull(const Mat& points, int dim_ambient) {
    if (points.empty()) throw std::invalid_argument("convex_hull: no points");
    // deduplicate, keeping first occurrences in order
    Mat pts;
    std::map<Vec, int> first;
    for (const Vec& p : points) {
        if (static_cast<int>(p.size()) != dim_ambient)
            throw std::invalid_argument("convex_hull: inconsistent point dimension");
        if (first.emplace(p, static_cast<int>(pts.size())).second) pts.push_back(p);
    }

    RationalPolytope poly;
    poly.dim_ambient = dim_ambient;

    std::vector<int> all_ids(pts.size());
    std::iota(all_ids.begin(), all_ids.end(), 0);
    Mat dirs = diffs_of(pts, all_ids);
    std::vector<int> cols = spanning_columns(dirs, dim_ambient);
    const int k = static_cast<int>(cols.size());
    if (k == 0) {
        poly.dim = 0;
        poly.vertices.push_back(pts[0]);
        return poly;
    }
    Mat q;
    for (const Vec& p : pts) {
        Vec row;
        for (int c : cols) row.push_back(p[c]);
        q.push_back(std::move(row));
    }

    std::vector<HFacet> hf = hull_facets(q, k);

    // extreme points: contained-facet normals span the chart
    std::vector<std::vector<int>> facets_of_point(pts.size());
    for (std::size_t fi = 0; fi < hf.size(); ++fi)
        for (int p : hf[fi].tight) facets_of_point[p].push_back(static_cast<int>(fi));
    std::vector<int> new_id(pts.size(), -1);
    for (std::size_t p = 0; p < pts.size(); ++p) {
        Mat normals;
        for (int fi : facets_of_point[p]) normals.push_back(hf[fi].normal);
        if (mat_rank(std::move(normals)) == k) {
            new_id[p] = static_cast<int>(poly.vertices.size());
            poly.vertices.push_back(pts[p]);
        }
    }

    poly.dim = k;
    for (const HFacet& f : hf) {
        PolytopeFace pf;
        for (int p : f.tight)
            if (new_id[p] >= 0) pf.vertex_ids.push_back(new_id[p]);
        std::sort(pf.vertex_ids.begin(), pf.vertex_ids.end());
        pf.dim = k - 1;
        // lift the chart normal to an ambient functional
        Vec ambient(dim_ambient, 0);
        for (int i = 0; i < k; ++i) ambient[cols[i]] = f.normal[i];
        poly.facet_offsets.push_back(dot(ambient, pts[f.tight[0]]));
        poly.facet_normals.push_back(std::move(ambient));
        poly.facets.push_back(std::move(pf));
    }
    return poly;
}

RationalPolytope cyclic_polytope(int d, int n, const std::vector<mpq_class>& parameters) {
    if (n < d + 1 || d < 1) throw std::invalid_argument("cyclic_polytope: need n >= d+1 >= 2");
    std::vector<mpq_class> params = parameters;
    if (params.empty())
        for (int i = 1; i <= n; ++i) params.emplace_back(i);
    if (static_cast<int>(params.size()) != n)
        throw std::invalid_argument("cyclic_polytope: wrong parameter count");
    std::set<mpq_class> distinct(params.begin(), params.end());
    if (static_cast<int>(distinct.size()) != n)
        throw std::invalid_argument("cyclic_polytope: duplicate parameters");
    Mat points;
    for (const mpq_class& t : params) {
        Vec row;
        mpq_class v = 1;
        for (int i = 0; i < d; ++i) {
            v *= t;
            row.push_back(v);
        }
        points.push_back(std::move(row));
    }
    return convex_hull(points, d);
}

std::vector<i64> PolytopeFamily::vertex_counts() const {
    std::vector<i64> n;
    for (const RationalPolytope& p : members) n.push_back(static_cast<i64>(p.vertices.size()));
    return n;
}

bool PolytopeFamily::is_pure() const {
    for (const RationalPolytope& p : members)
        if (static_cast<int>(p.vertices.size()) < d + 1) return false;
    return true;
}

MinkowskiSum minkowski_sum(const PolytopeFamily& family) {
    if (family.members.empty()) throw std::invalid_argument("minkowski_sum: empty family");
    const int d = family.d;
    Mat candidates{Vec(d, 0)};
    for (const RationalPolytope& p : family.members) {
        Mat next;
        for (const Vec& base : candidates)
            for (const Vec& v : p.vertices) {
                Vec s(d);
                for (int c = 0; c < d; ++c) s[c] = base[c] + v[c];
                next.push_back(std::move(s));
            }
        candidates = std::move(next);
    }
    MinkowskiSum out;
    out.sum = convex_hull(candidates, d);

    const std::vector<PolytopeFace>& lattice = out.sum.face_lattice();
    for (const PolytopeFace& face : lattice) {
        // representative functional: sum of the outer normals of the facets
        // containing the face (relative interior of its normal cone)
        Vec w(d, 0);
        for (std::size_t fi = 0; fi < out.sum.facets.size(); ++fi) {
            const std::vector<int>& fv = out.sum.facets[fi].vertex_ids;
            if (std::includes(fv.begin(), fv.end(), face.vertex_ids.begin(),
                              face.vertex_ids.end()))
                for (int c = 0; c < d; ++c) w[c] += out.sum.facet_normals[fi][c];
        }
        std::vector<PolytopeFace> parts;
        for (const RationalPolytope& p : family.members) {
            PolytopeFace part;
            mpq_class best;
            for (std::size_t v = 0; v < p.vertices.size(); ++v) {
                const mpq_class val = dot(w, p.vertices[v]);
                if (part.vertex_ids.empty() || val > best) {
                    best = val;
                    part.vertex_ids = {static_cast<int>(v)};
                } else if (val == best) {
                    part.vertex_ids.push_back(static_cast<int>(v));
                }
            }
            part.dim = affine_rank(p.vertices, part.vertex_ids);
            parts.push_back(std::move(part));
        }
        out.decomposition.push_back(std::move(parts));
    }
    return out;
}

namespace {

// Cayley embedding points (p, e_i) in R^{d+m}, members concatenated.
Mat cayley_points(const PolytopeFamily& family) {
    const int m = static_cast<int>(family.members.size());
    Mat points;
    for (int i = 0; i < m; ++i)
        for (const Vec& v : family.members[i].vertices) {
            Vec row = v;
            for (int j = 0; j < m; ++j) row.emplace_back(j == i ? 1 : 0);
            points.push_back(std::move(row));
        }
    return points;
}

}  // namespace

CayleyData cayley_complex(const PolytopeFamily& family) {
    if (family.members.empty()) throw std::invalid_argument("cayley_complex: empty family");
    const int m = static_cast<int>(family.members.size());
    for (const RationalPolytope& p : family.members)
        for (const PolytopeFace& f : p.facets)
            if (static_cast<int>(f.vertex_ids.size()) != p.dim)
                throw std::invalid_argument("cayley_complex: member is not simplicial");
    if (m > 1 && !check_relative_general_position(family))
        throw std::invalid_argument("cayley_complex: family not in relatively general position");

    CayleyData data;
    for (int i = 0; i < m; ++i)
        for (std::size_t v = 0; v < family.members[i].vertices.size(); ++v)
            data.label_of_vertex.push_back(i);
    data.cayley = convex_hull(cayley_points(family), family.d + m);
    if (data.cayley.vertices.size() != data.label_of_vertex.size())
        throw std::logic_error("cayley_complex: summand vertex lost in the Cayley polytope");

    std::vector<Face> label_complete;
    for (const PolytopeFace& f : data.cayley.facets) {
        std::set<int> labels;
        for (int v : f.vertex_ids) labels.insert(data.label_of_vertex[v]);
        if (static_cast<int>(labels.size()) < m) continue;
        if (static_cast<int>(f.vertex_ids.size()) != data.cayley.dim)
            throw std::invalid_argument(
                "cayley_complex: non-simplex label-complete facet (general-position violation)");
        Face face;
        for (int v : f.vertex_ids) face.push_back(v + 1);
        label_complete.push_back(std::move(face));
    }
    data.t_full = SimplicialComplex::from_facets(std::move(label_complete));

    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Face keep;
        for (std::size_t v = 0; v < data.label_of_vertex.size(); ++v)
            if (mask & (1u << data.label_of_vertex[v])) keep.push_back(static_cast<int>(v) + 1);
        data.t_s[mask] = data.t_full.restriction(keep);
    }

    SimplicialComplex gamma;  // union of the T_[m]∖i
    const unsigned full_mask = (1u << m) - 1;
    for (int i = 0; i < m; ++i)
        gamma = SimplicialComplex::unite(gamma, data.t_s.at(full_mask & ~(1u << i)));
    data.t_circ = RelativeComplex(data.t_full, std::move(gamma));
    return data;
}

bool check_relative_general_position(const PolytopeFamily& family) {
    MinkowskiSum ms = minkowski_sum(family);
    const std::vector<PolytopeFace>& lattice = ms.sum.face_lattice();
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        int total = 0;
        for (const PolytopeFace& part : ms.decomposition[i]) total += part.dim;
        if (lattice[i].dim != total) return false;
    }
    return true;
}

PolytopeFamily perturb(const PolytopeFamily& family, i64 seed, const mpq_class& magnitude) {
    if (magnitude <= 0) throw std::invalid_argument("perturb: magnitude must be positive");
    std::mt19937_64 rng(static_cast<unsigned long long>(seed) ^ 0xc2b2ae3d27d4eb4fULL);
    mpq_class mag = magnitude;
    const long kDen = 1000000;
    std::uniform_int_distribution<long> dist(-kDen, kDen);
    for (int attempt = 0; attempt < 16; ++attempt, mag /= 2) {
        PolytopeFamily jittered;
        jittered.d = family.d;
        bool ok = true;
        for (const RationalPolytope& p : family.members) {
            Mat moved = p.vertices;
            for (Vec& row : moved)
                for (mpq_class& v : row) v += mag * mpq_class(dist(rng), kDen);
            RationalPolytope hull = convex_hull(moved, family.d);
            if (hull.vertices.size() != p.vertices.size()) { ok = false; break; }
            for (const PolytopeFace& f : hull.facets)
                if (static_cast<int>(f.vertex_ids.size()) != hull.dim) { ok = false; break; }
            if (!ok) break;
            jittered.members.push_back(std::move(hull));
        }
        if (!ok) continue;
        if (check_relative_general_position(jittered)) return jittered;
    }
    throw std::runtime_error("perturb: retry budget exhausted");
}

std::vector<i64> mixed_faces(const PolytopeFamily& family) {
    MinkowskiSum ms = minkowski_sum(family);
    const std::vector<PolytopeFace>& lattice = ms.sum.face_lattice();
    std::vector<i64> fmix(family.d, 0);
    for (std::size_t i = 0; i < lattice.size(); ++i) {
        int total = 0;
        bool mixed = true;
        for (const PolytopeFace& part : ms.decomposition[i]) {
            total += part.dim;
            if (part.dim == 0) mixed = false;
        }
        if (lattice[i].dim != total)
            throw std::invalid_argument("mixed_faces: family not in relatively general position");
        if (mixed) ++fmix[lattice[i].dim];
    }
    return fmix;
}

int radon_nonface_search(const PolytopeFamily& family) {
    const int m = static_cast<int>(family.members.size());
    const int d = family.d;
    i64 total = 0;
    for (const RationalPolytope& p : family.members) total += static_cast<i64>(p.vertices.size());
    if (total <= d + m)
        throw std::invalid_argument("radon_nonface_search: too few vertices for a Radon point");

    RationalPolytope cay = convex_hull(cayley_points(family), d + m);
    const int n = static_cast<int>(cay.vertices.size());
    const int bound = (d + m + 1) / 2;
    for (int size = 2; size <= bound; ++size) {
        std::vector<int> subset(size);
        std::iota(subset.begin(), subset.end(), 0);
        auto advance = [&]() {
            int i = size - 1;
            while (i >= 0 && subset[i] == n - size + i) --i;
            if (i < 0) return false;
            ++subset[i];
            for (int j = i + 1; j < size; ++j) subset[j] = subset[j - 1] + 1;
            return true;
        };
        do {
            bool contained = false;
            for (const PolytopeFace& f : cay.facets) {
                if (std::includes(f.vertex_ids.begin(), f.vertex_ids.end(), subset.begin(),
                                  subset.end())) {
                    contained = true;
                    break;
                }
            }
            if (!contained) return size;
        } while (advance());
    }
    throw std::logic_error("radon_nonface_search: no non-face within the Radon bound");
}

}  // namespace relsr
