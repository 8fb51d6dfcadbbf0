// Exact rational vectors/matrices (GMP) and the small linear-algebra kernel
// used by the polytope code: ranks, nullspaces, affine ranks, parsing.
#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace relsr {

using Vec = std::vector<mpq_class>;
using Mat = std::vector<Vec>;

// Parses "p/q" or "p" (arbitrary precision), canonicalized.
inline mpq_class parse_rational(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    v.canonicalize();
    return v;
}

inline std::string rational_to_string(const mpq_class& v) { return v.get_str(); }

inline mpq_class dot(const Vec& a, const Vec& b) {
    mpq_class s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// Row rank by Gaussian elimination (destructive on the copy).
inline int mat_rank(Mat m) {
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
        for (int r = rank + 1; r < rows; ++r) {
            if (m[r][c] == 0) continue;
            const mpq_class f = m[r][c] / m[rank][c];
            for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        ++rank;
    }
    return rank;
}

// Basis (as rows) of the right nullspace {x : m x = 0}.
inline Mat nullspace(Mat m, int cols) {
    const int rows = static_cast<int>(m.size());
    // reduce to row echelon form, track pivot columns
    std::vector<int> pivot_col;
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pivot = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] != 0) { pivot = r; break; }
        if (pivot < 0) continue;
        std::swap(m[rank], m[pivot]);
        const mpq_class inv = 1 / m[rank][c];
        for (int cc = c; cc < cols; ++cc) m[rank][cc] *= inv;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const mpq_class f = m[r][c];
            for (int cc = c; cc < cols; ++cc) m[r][cc] -= f * m[rank][cc];
        }
        pivot_col.push_back(c);
        ++rank;
    }
    std::vector<bool> is_pivot(cols, false);
    for (int c : pivot_col) is_pivot[c] = true;
    Mat basis;
    for (int freec = 0; freec < cols; ++freec) {
        if (is_pivot[freec]) continue;
        Vec x(cols, 0);
        x[freec] = 1;
        for (int r = 0; r < rank; ++r) x[pivot_col[r]] = -m[r][freec];
        basis.push_back(std::move(x));
    }
    return basis;
}

// Affine rank (dimension) of a point set: rank of differences to the first.
inline int affine_rank(const Mat& points, const std::vector<int>& ids) {
    if (ids.empty()) return -1;
    Mat diffs;
    const Vec& base = points[ids[0]];
    for (std::size_t i = 1; i < ids.size(); ++i) {
        Vec d(base.size());
        for (std::size_t c = 0; c < base.size(); ++c) d[c] = points[ids[i]][c] - base[c];
        diffs.push_back(std::move(d));
    }
    return mat_rank(std::move(diffs));
}

}  // namespace relsr
