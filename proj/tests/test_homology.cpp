// Tests for homology: Betti numbers, CM/Buchsbaum predicates, local
// cohomology Hilbert functions, h^top and cover quality.
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "relsr/homology.hpp"

using namespace relsr;
using fixtures::boundary_simplex;
using fixtures::rp2_6;

namespace {

const FieldSpec Q = FieldSpec::Q();
const FieldSpec F2 = FieldSpec::GF(2);

RelativeComplex abs_rc(const SimplicialComplex& c) { return RelativeComplex::absolute(c); }

SimplicialComplex random_pure(std::mt19937_64& rng, int n, int k, int count) {
    std::vector<Face> fs;
    std::vector<int> verts(n);
    for (int i = 0; i < n; ++i) verts[i] = i + 1;
    for (int t = 0; t < count; ++t) {
        std::shuffle(verts.begin(), verts.end(), rng);
        fs.emplace_back(verts.begin(), verts.begin() + k);
    }
    return SimplicialComplex::from_facets(fs);
}

}  // namespace

TEST_CASE("betti of frozen examples") {
    BettiTable s2 = betti(abs_rc(boundary_simplex(3)), Q);
    CHECK(s2.betti(-1) == 0);
    CHECK(s2.betti(0) == 0);
    CHECK(s2.betti(1) == 0);
    CHECK(s2.betti(2) == 1);

    BettiTable rp_f2 = betti(abs_rc(rp2_6()), F2);
    CHECK(rp_f2.betti(0) == 0);
    CHECK(rp_f2.betti(1) == 1);
    CHECK(rp_f2.betti(2) == 1);

    BettiTable rp_q = betti(abs_rc(rp2_6()), Q);
    CHECK(rp_q.betti(0) == 0);
    CHECK(rp_q.betti(1) == 0);
    CHECK(rp_q.betti(2) == 0);

    // (ball, boundary): relative homology concentrated in the top dimension
    SimplicialComplex ball = SimplicialComplex::full_simplex({1, 2, 3, 4});
    RelativeComplex pair(ball, boundary_simplex(3));
    BettiTable rel = betti(pair, Q);
    CHECK(rel.betti(3) == 1);
    CHECK(rel.betti(2) == 0);
    CHECK(rel.betti(1) == 0);
    CHECK(rel.betti(0) == 0);

    // {∅} has β̃_{-1} = 1
    BettiTable e = betti(abs_rc(SimplicialComplex::empty_complex()), Q);
    CHECK(e.betti(-1) == 1);
}

TEST_CASE("universal coefficients and Euler check") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 25; ++t) {
        SimplicialComplex c = random_pure(rng, 7, 3, 6);
        RelativeComplex rc = abs_rc(c);
        BettiTable bq = betti(rc, Q);
        BettiTable b2 = betti(rc, F2);
        i64 chi_q = 0, chi_2 = 0;
        for (int i = -1; i <= c.dim(); ++i) {
            CHECK(bq.betti(i) <= b2.betti(i));
            chi_q += (i % 2 == 0 ? 1 : -1) * bq.betti(i);
            chi_2 += (i % 2 == 0 ? 1 : -1) * b2.betti(i);
        }
        CHECK(chi_q == euler_characteristic(rc));
        CHECK(chi_2 == euler_characteristic(rc));
    }
}

TEST_CASE("Cohen-Macaulay predicate") {
    CHECK(is_cohen_macaulay(abs_rc(boundary_simplex(2)), Q));
    CHECK(is_cohen_macaulay(abs_rc(boundary_simplex(3)), Q));

    SimplicialComplex bowtie = SimplicialComplex::from_facets({{1, 2, 3}, {1, 4, 5}});
    CHECK_FALSE(is_cohen_macaulay(abs_rc(bowtie), Q));

    // (ball, full boundary) is CM
    SimplicialComplex ball = SimplicialComplex::from_facets({{1, 2, 3}, {1, 3, 4}});
    SimplicialComplex bd = SimplicialComplex::from_facets({{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK(is_cohen_macaulay(RelativeComplex(ball, bd), Q));

    // RP^2_6 is CM over Q but not over GF(2)
    CHECK(is_cohen_macaulay(abs_rc(rp2_6()), Q));
    CHECK_FALSE(is_cohen_macaulay(abs_rc(rp2_6()), F2));
}

TEST_CASE("Buchsbaum predicate") {
    CHECK(is_buchsbaum(abs_rc(rp2_6()), F2));
    CHECK(is_buchsbaum(abs_rc(rp2_6()), Q));
    CHECK(is_buchsbaum(abs_rc(boundary_simplex(3)), Q));

    SimplicialComplex bowtie = SimplicialComplex::from_facets({{1, 2, 3}, {1, 4, 5}});
    CHECK_FALSE(is_buchsbaum(abs_rc(bowtie), Q));

    // 1-dimensional wedge of two triangle boundaries: vertex links are
    // 0-dimensional, hence vacuously CM, so the wedge is Buchsbaum.
    SimplicialComplex wedge = SimplicialComplex::from_facets(
        {{1, 2}, {2, 3}, {1, 3}, {1, 4}, {4, 5}, {1, 5}});
    CHECK(is_buchsbaum(abs_rc(wedge), Q));

    CHECK_THROWS_AS(
        is_buchsbaum(abs_rc(SimplicialComplex::from_facets({{1, 2, 3}, {4, 5}})), Q),
        std::invalid_argument);
}

TEST_CASE("CM implies Buchsbaum; skeleton heredity") {
    std::mt19937_64 rng(7);
    int tested = 0;
    for (int t = 0; t < 40 && tested < 12; ++t) {
        SimplicialComplex c = random_pure(rng, 7, 3, 6);
        RelativeComplex rc = abs_rc(c);
        if (!is_cohen_macaulay(rc, Q)) continue;
        ++tested;
        CHECK(is_buchsbaum(rc, Q));
        for (int i = 1; i <= c.dim() + 1; ++i)
            CHECK(is_cohen_macaulay(abs_rc(c.skeleton(i)), Q));
    }
    CHECK(tested > 0);

    // Buchsbaum heredity on RP^2_6 skeleta
    for (int i = 1; i <= 3; ++i)
        CHECK(is_buchsbaum(abs_rc(rp2_6().skeleton(i)), F2));
}

TEST_CASE("local cohomology Hilbert functions") {
    // CM complex: H^i vanishes below depth = dim+1 = 3
    RelativeComplex sphere = abs_rc(boundary_simplex(3));
    for (int i = 0; i < 3; ++i) {
        auto h = local_cohomology_hilbert(sphere, Q, i);
        for (auto& [deg, dim] : h) CHECK(dim == 0);
    }

    // RP^2_6 over GF(2): H^2 concentrated in degree 0 with dim = β̃_1 = 1
    auto h2 = local_cohomology_hilbert(abs_rc(rp2_6()), F2, 2);
    CHECK(h2[0] == 1);
    for (auto& [deg, dim] : h2)
        if (deg != 0) CHECK(dim == 0);

    // Buchsbaum: coarse local cohomology concentrated in degree 0 for i <= dim
    for (int i = 0; i <= 2; ++i) {
        auto h = local_cohomology_hilbert(abs_rc(rp2_6()), F2, i);
        for (auto& [deg, dim] : h)
            if (deg != 0) CHECK(dim == 0);
    }
}

TEST_CASE("h_top") {
    auto zero = h_top(abs_rc(boundary_simplex(3)), Q);
    CHECK(zero == std::vector<i64>{0, 0, 0, 0});

    auto rp = h_top(abs_rc(rp2_6()), F2);
    CHECK(rp == std::vector<i64>{0, 0, 0, -1});

    auto rpq = h_top(abs_rc(rp2_6()), Q);
    CHECK(rpq == std::vector<i64>{0, 0, 0, 0});

    CHECK_THROWS_AS(
        h_top(abs_rc(SimplicialComplex::from_facets({{1, 2, 3}, {1, 4, 5}})), Q),
        std::invalid_argument);
}

TEST_CASE("cover quality") {
    // Disjoint CM codimension-0 subcomplexes of a CM complex: d-magnificent.
    SimplicialComplex path =
        SimplicialComplex::from_facets({{1, 2}, {2, 3}, {3, 4}, {4, 5}});
    Arrangement arr(path, {SimplicialComplex::from_facets({{1, 2}}),
                           SimplicialComplex::from_facets({{3, 4}})});
    CoverQuality q = cover_quality(path, arr, 2, Q);
    CHECK(q.is_good);
    CHECK(q.is_magnificent);

    // A ball with its full boundary as single member: good up to d-1.
    SimplicialComplex ball = SimplicialComplex::from_facets({{1, 2, 3}, {1, 3, 4}});
    SimplicialComplex bd = SimplicialComplex::from_facets({{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CoverQuality qb = cover_quality(ball, Arrangement(ball, {bd}), 2, Q);
    CHECK(qb.is_good);
}
