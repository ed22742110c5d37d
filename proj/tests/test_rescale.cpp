#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braids/rescale.hpp"
#include "braids/verify.hpp"

using namespace braids;

namespace {

Laurent L(long c) { return Laurent(c); }
Laurent q(int e = 1) { return Laurent::q(e); }

SymMatrix from_rows(int n, std::vector<std::vector<Laurent>> rows) {
    SymMatrix m(n);
    for (int r = 0; r < m.dim(); ++r)
        for (int c = 0; c < m.dim(); ++c) m.at(r, c) = rows[r][c];
    return m;
}

RescalingSpec spec_of(int n, const std::string& scaled, const std::string& fixed) {
    return RescalingSpec{n, parse_partition(n, scaled), parse_partition(n, fixed)};
}

RescalingSpec complement_spec(const NCPartition& sigma, Side side) {
    return RescalingSpec{sigma.n, sigma,
                         from_permutation(complement(to_permutation(sigma), side))};
}

}  // namespace

TEST_CASE("deterministic tree choice") {
    auto plan = build_tree(spec_of(4, "{1,2}", "{2,3,4}"));
    REQUIRE(plan.edges.size() == 3);
    CHECK(plan.edges[0].e == Edge{1, 2});
    CHECK(plan.edges[0].scaled_by_q);
    CHECK(plan.edges[1].e == Edge{2, 3});
    CHECK_FALSE(plan.edges[1].scaled_by_q);
    CHECK(plan.edges[2].e == Edge{3, 4});
    CHECK_FALSE(plan.edges[2].scaled_by_q);

    auto path = build_tree(spec_of(5, "{1,2,3,4,5}", "{}"));
    REQUIRE(path.edges.size() == 4);
    for (const auto& te : path.edges) CHECK(te.scaled_by_q);

    CHECK_THROWS_AS(build_tree(spec_of(4, "{1,2}", "{3,4}")), NotHypertree);
    CHECK_THROWS_AS(build_tree(spec_of(4, "{1,2,3,4}", "{2,3,4}")), NotHypertree);
}

TEST_CASE("triangle rescaling matrix (the 3x3 formula)") {
    SymMatrix r = rescaling_matrix(spec_of(3, "{1,2}", "{2,3}"));
    SymMatrix expect = from_rows(3, {{q(2), L(0), L(0)},
                                     {q(2) - q(), q(), L(1) - q()},
                                     {L(0), L(0), L(1)}});
    CHECK(r == expect);
}

TEST_CASE("tetrahedron rescaling matrix") {
    SymMatrix r = rescaling_matrix(spec_of(4, "{1,2}", "{2,3,4}"));
    SymMatrix expect = from_rows(
        4, {{q(2), L(0), L(0), L(0), L(0), L(0)},
            {q(2) - q(), q(), L(0), L(1) - q(), L(0), L(0)},
            {q(2) - q(), L(0), q(), L(0), L(1) - q(), L(0)},
            {L(0), L(0), L(0), L(1), L(0), L(0)},
            {L(0), L(0), L(0), L(0), L(1), L(0)},
            {L(0), L(0), L(0), L(0), L(0), L(1)}});
    CHECK(r == expect);
}

TEST_CASE("diagonal edge: both complements of e24") {
    Laurent one = L(1);
    // Fixing rc(24) = {14, 23}: row e13 carries (1-q) on a14+a23 and
    // (q-1) on a12+a34.
    SymMatrix rc = rescaling_matrix(spec_of(4, "{2,4}", "{2,3|1,4}"));
    int row = edge_rank(1, 3, 4);
    CHECK(rc.at(row, edge_rank(1, 3, 4)) == one);
    CHECK(rc.at(row, edge_rank(2, 4, 4)) == (q() - one) * (q() - one));
    CHECK(rc.at(row, edge_rank(1, 4, 4)) == one - q());
    CHECK(rc.at(row, edge_rank(2, 3, 4)) == one - q());
    CHECK(rc.at(row, edge_rank(1, 2, 4)) == q() - one);
    CHECK(rc.at(row, edge_rank(3, 4, 4)) == q() - one);
    // Fixing lc(24) = {12, 34}: the coefficient groups swap.
    SymMatrix lc = rescaling_matrix(spec_of(4, "{2,4}", "{1,2|3,4}"));
    CHECK(lc.at(row, edge_rank(1, 3, 4)) == one);
    CHECK(lc.at(row, edge_rank(2, 4, 4)) == (q() - one) * (q() - one));
    CHECK(lc.at(row, edge_rank(1, 4, 4)) == q() - one);
    CHECK(lc.at(row, edge_rank(2, 3, 4)) == q() - one);
    CHECK(lc.at(row, edge_rank(1, 2, 4)) == one - q());
    CHECK(lc.at(row, edge_rank(3, 4, 4)) == one - q());
}

TEST_CASE("entries stay quadratic in q") {
    for (int n = 3; n <= 6; ++n)
        for (const auto& sigma : enumerate_nc(n)) {
            SymMatrix r = rescaling_matrix(complement_spec(sigma, Side::Right));
            for (int i = 0; i < r.dim(); ++i)
                for (int j = 0; j < r.dim(); ++j) {
                    REQUIRE(r.at(i, j).max_q_degree() <= 2);
                    REQUIRE(r.at(i, j).min_q_degree() >= 0);
                    REQUIRE_FALSE(r.at(i, j).depends_on_t());
                }
        }
}

TEST_CASE("tree independence of the matrix") {
    std::mt19937_64 rng(101);
    for (int n = 3; n <= 6; ++n)
        for (const auto& sigma : enumerate_nc(n))
            for (Side side : {Side::Right, Side::Left}) {
                RescalingSpec spec = complement_spec(sigma, side);
                SymMatrix canon = rescaling_matrix(spec);
                for (int variant = 0; variant < 10; ++variant)
                    REQUIRE(matrix_from_tree(random_tree(spec, rng)) == canon);
            }
}

TEST_CASE("q = 1 is the identity, and R(q) R(1/q) = I") {
    for (int n = 3; n <= 5; ++n)
        for (const auto& sigma : enumerate_nc(n)) {
            SymMatrix r = rescaling_matrix(complement_spec(sigma, Side::Right));
            REQUIRE(eval_matrix(r, 1) == RatMatrix::identity(n));
            REQUIRE(r * with_q_reciprocal(r) == SymMatrix::identity(n));
        }
}

TEST_CASE("geometric oracle agrees with the matrix") {
    std::mt19937_64 rng(55);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 3 + iter % 3;
        auto all = enumerate_nc(n);
        const NCPartition& sigma = all[rng() % all.size()];
        Side side = (rng() & 1) ? Side::Right : Side::Left;
        RescalingSpec spec = complement_spec(sigma, side);
        SpanningTreePlan tree = build_tree(spec);
        RatPoints p = random_simplex(n, rng);
        mpq_class q0(static_cast<long>(1 + rng() % 7), static_cast<long>(1 + rng() % 7));
        q0.canonicalize();
        RatPoints moved = rescale_points(p, tree, q0);
        RatNorms direct = norms_from_points(moved);
        RatNorms via_matrix = RatNorms{
            n, eval_matrix(rescaling_matrix(spec), q0).apply(norms_from_points(p).a)};
        REQUIRE(direct == via_matrix);
    }
}

TEST_CASE("oracle basics") {
    RatNorms eq{3, {1, 1, 1}};
    RatPoints p = embed(eq);
    SpanningTreePlan tree{3, {{Edge{1, 2}, true}, {Edge{2, 3}, false}}};
    CHECK(norms_from_points(rescale_points(p, tree, 1)) == eq);
    RatNorms scaled = norms_from_points(rescale_points(p, tree, 2));
    CHECK(scaled == RatNorms{3, {4, 3, 1}});
    // all-q tree is a dilation about p1
    SpanningTreePlan dil{3, {{Edge{1, 2}, true}, {Edge{1, 3}, true}}};
    RatNorms dilated = norms_from_points(rescale_points(p, dil, 3));
    CHECK(dilated == RatNorms{3, {9, 9, 9}});
}

TEST_CASE("general scale factors in the point oracle") {
    std::mt19937_64 rng(77);
    RatPoints p = random_simplex(4, rng);
    std::vector<Edge> edges = {{1, 2}, {2, 3}, {3, 4}};
    std::vector<mpq_class> factors = {mpq_class(3), mpq_class(1, 2), mpq_class(5, 3)};
    RatPoints moved = rescale_points_general(p, edges, factors);
    RatNorms before = norms_from_points(p), after = norms_from_points(moved);
    for (size_t s = 0; s < edges.size(); ++s) {
        int r = edge_rank(edges[s], 4);
        REQUIRE(after.a[r] == before.a[r] * factors[s] * factors[s]);
    }
    CHECK_THROWS_AS(rescale_points_general(p, edges, {mpq_class(1)}),
                    DimensionMismatch);
    CHECK_THROWS_AS(
        rescale_points_general(p, {{1, 2}, {1, 3}, {2, 3}},
                               {mpq_class(1), mpq_class(1), mpq_class(1)}),
        NotHypertree);
}

TEST_CASE("composition across five-permutation triples") {
    for (int n = 3; n <= 5; ++n) {
        auto all = enumerate_nc(n);
        Perm delta = Perm::delta(n);
        int checked = 0;
        for (const auto& p1 : all)
            for (const auto& p2 : all) {
                Perm s1 = to_permutation(p1), s2 = to_permutation(p2);
                Perm prod = s1.compose(s2);
                if (!is_noncrossing_permutation(prod)) continue;
                if (s1.reflection_length() + s2.reflection_length() !=
                    prod.reflection_length())
                    continue;
                FivePerms f = five_permutations(s1, s2);
                NCPartition p12 = from_permutation(prod);
                NCPartition p4 = from_permutation(f.s4);
                NCPartition p42 = from_permutation(f.s4.compose(s2));
                NCPartition p14 = from_permutation(s1.compose(f.s4));
                SymMatrix lhs =
                    rescaling_matrix(RescalingSpec{n, p1, p42}) *
                    rescaling_matrix(RescalingSpec{n, p2, p14});
                SymMatrix rhs = rescaling_matrix(RescalingSpec{n, p12, p4});
                REQUIRE(lhs == rhs);
                ++checked;
            }
        REQUIRE(checked > 0);
    }
}
