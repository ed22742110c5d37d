#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "braids/disc.hpp"
#include "braids/noncrossing.hpp"

using namespace braids;

namespace {

const long CATALAN[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};

// make_partition with singletons filled in
NCPartition part(int n, std::vector<std::vector<int>> blocks) {
    std::vector<bool> used(n + 1, false);
    for (const auto& b : blocks)
        for (int x : b) used[x] = true;
    for (int x = 1; x <= n; ++x)
        if (!used[x]) blocks.push_back({x});
    return make_partition(n, std::move(blocks));
}

}  // namespace

TEST_CASE("noncrossing test on the figure-2 subsets") {
    CHECK_FALSE(is_noncrossing({{1, 2, 4, 5}, {3, 7, 8}, {6}, {9}}, 9));
    CHECK(is_noncrossing({{1, 2, 4, 5}, {7, 8, 9}, {3}, {6}}, 9));
    CHECK(is_noncrossing(discrete_partition(7).blocks, 7));
    CHECK(is_noncrossing({{2, 3}, {1, 4}}, 4));  // nested
    CHECK_FALSE(is_noncrossing({{1, 3}, {2, 4}}, 4));
    CHECK_THROWS_AS(is_noncrossing({{1, 2}, {2, 3}}, 3), NotAPartition);
    CHECK_THROWS_AS(is_noncrossing({{1, 2}}, 3), NotAPartition);
    CHECK_THROWS_AS(make_partition(4, {{1, 3}, {2, 4}}), NotNoncrossingPermutation);
}

TEST_CASE("enumeration counts are Catalan") {
    for (int n = 1; n <= 10; ++n)
        CHECK(enumerate_nc(n).size() == static_cast<size_t>(CATALAN[n]));
    CHECK_THROWS_AS(enumerate_nc(13), CapExceeded);
    // deterministic order and no duplicates
    auto all = enumerate_nc(5);
    for (size_t i = 0; i + 1 < all.size(); ++i) REQUIRE(all[i].blocks < all[i + 1].blocks);
}

TEST_CASE("four nested families of dual simple braids, n=4") {
    auto all = enumerate_nc(4);
    int pairs = 0, rotations = 0;
    for (const auto& p : all) {
        int nonsingleton = 0;
        size_t big = 0;
        for (const auto& b : p.blocks)
            if (b.size() >= 2) {
                ++nonsingleton;
                big = b.size();
            }
        if (nonsingleton == 1) {
            ++rotations;
            if (big == 2) ++pairs;
        }
    }
    CHECK(pairs == 6);        // Gen_4
    CHECK(rotations == 11);   // Rot_4 minus the identity
    CHECK(all.size() == 14);  // Simp_4
}

TEST_CASE("partitions and permutations correspond") {
    auto p = part(9, {{1, 3, 4}, {5, 6, 7, 8, 9}});
    Perm sigma = to_permutation(p);
    CHECK(sigma.str() == "(1,3,4)(5,6,7,8,9)");
    CHECK(to_permutation(full_partition(5)) == Perm::delta(5));
    CHECK(to_permutation(discrete_partition(5)).is_identity());
    CHECK(from_permutation(sigma) == p);
    CHECK(from_permutation(Perm(5)) == discrete_partition(5));
    CHECK_THROWS_AS(from_permutation(Perm::cycle(4, {1, 4, 3})),
                    NotNoncrossingPermutation);
    // cycles increase from their minima but the supports cross
    CHECK_THROWS_AS(
        from_permutation(Perm::cycle(4, {1, 3}).compose(Perm::cycle(4, {2, 4}))),
        NotNoncrossingPermutation);
    CHECK_THROWS_AS(enumerate_nc(0), OutOfRange);
    for (int n = 1; n <= 7; ++n)
        for (const auto& x : enumerate_nc(n)) REQUIRE(from_permutation(to_permutation(x)) == x);
}

TEST_CASE("complements reproduce the figure-5 data") {
    Perm sigma = Perm::cycle(9, {1, 3, 6});
    CHECK(complement(sigma, Side::Left) == Perm::parse(9, "(2,3)(4,5,6)(1,7,8,9)"));
    CHECK(complement(sigma, Side::Right) == Perm::parse(9, "(1,2)(3,4,5)(6,7,8,9)"));
    CHECK(complement(Perm(6), Side::Left) == Perm::delta(6));
    CHECK(complement(Perm(6), Side::Right) == Perm::delta(6));
}

TEST_CASE("complement identities across NC_n") {
    for (int n = 2; n <= 7; ++n) {
        Perm delta = Perm::delta(n);
        for (const auto& p : enumerate_nc(n)) {
            Perm sigma = to_permutation(p);
            Perm lc = complement(sigma, Side::Left);
            Perm rc = complement(sigma, Side::Right);
            REQUIRE(lc.compose(sigma) == delta);
            REQUIRE(sigma.compose(rc) == delta);
            REQUIRE(complement(lc, Side::Right) == sigma);
            REQUIRE(complement(rc, Side::Left) == sigma);
        }
    }
}

TEST_CASE("complement blocks are the left/right edges") {
    // Every intra-block edge of lc(sigma) must be to the left of or
    // noncrossing with every intra-block edge of sigma; dually for rc.
    for (int n = 3; n <= 6; ++n) {
        for (const auto& p : enumerate_nc(n)) {
            auto sigma_edges = [&] {
                std::vector<Edge> edges;
                for (const auto& b : p.blocks)
                    for (Edge e : block_edges(b)) edges.push_back(e);
                return edges;
            }();
            auto check_side = [&](Side side, EdgePairClass expect) {
                NCPartition comp = complement(p, side);
                for (const auto& b : comp.blocks)
                    for (Edge f : block_edges(b))
                        for (Edge e : sigma_edges) {
                            auto cls = classify_pair(e, f, n);
                            REQUIRE((cls == expect || cls == EdgePairClass::Noncrossing));
                        }
            };
            // f left of e <=> (e,f) counterclockwise
            check_side(Side::Left, EdgePairClass::Counterclockwise);
            check_side(Side::Right, EdgePairClass::Clockwise);
        }
    }
}

TEST_CASE("five permutations: the figure-6 triple") {
    Perm s1 = Perm::cycle(9, {2, 3, 4, 5});
    Perm s2 = Perm::cycle(9, {5, 6, 7});
    FivePerms f = five_permutations(s1, s2);
    CHECK(f.s3.str() == "(1,7,8,9)");
    CHECK(f.s4.str() == "(1,5,8,9)");
    CHECK(f.s5.str() == "(1,2,8,9)");
}

TEST_CASE("five permutations: degenerate and boundary cases") {
    Perm id(5), sigma = Perm::cycle(5, {1, 3, 4});
    FivePerms f = five_permutations(id, sigma);
    CHECK(f.s3 == complement(sigma, Side::Right));
    CHECK(f.s4 == complement(sigma, Side::Left));
    CHECK(f.s5 == complement(sigma, Side::Left));
    FivePerms g = five_permutations(Perm::cycle(3, {1, 2}), Perm::cycle(3, {2, 3}));
    CHECK(g.s3.is_identity());
    CHECK(g.s4.is_identity());
    CHECK(g.s5.is_identity());
    // product noncrossing but not geodesic: rejected
    CHECK_THROWS_AS(five_permutations(Perm::cycle(3, {1, 2}), Perm::cycle(3, {1, 2})),
                    ProductNotNoncrossing);
    // crossing product: rejected
    CHECK_THROWS_AS(five_permutations(Perm::cycle(4, {1, 3}), Perm::cycle(4, {2, 4})),
                    ProductNotNoncrossing);
}

TEST_CASE("lattice operations: examples") {
    auto x = part(4, {{1, 2}, {3, 4}});
    CHECK(nc_meet(x, discrete_partition(4)) == discrete_partition(4));
    CHECK(nc_join(x, full_partition(4)) == full_partition(4));
    CHECK(nc_meet(x, part(4, {{2, 3}, {1}, {4}})) == discrete_partition(4));
    CHECK(nc_leq(x, full_partition(4)));
    CHECK_FALSE(nc_leq(full_partition(4), x));
    CHECK_THROWS_AS(nc_meet(x, discrete_partition(5)), DimensionMismatch);
}

TEST_CASE("join is the least upper bound (brute force, n <= 6)") {
    for (int n = 2; n <= 6; ++n) {
        auto all = enumerate_nc(n);
        for (const auto& a : all)
            for (const auto& b : all) {
                NCPartition j = nc_join(a, b);
                REQUIRE(nc_leq(a, j));
                REQUIRE(nc_leq(b, j));
                for (const auto& c : all)
                    if (nc_leq(a, c) && nc_leq(b, c)) REQUIRE(nc_leq(j, c));
            }
    }
}

TEST_CASE("complement reverses order") {
    for (int n = 2; n <= 6; ++n) {
        auto all = enumerate_nc(n);
        for (const auto& a : all)
            for (const auto& b : all)
                if (nc_leq(a, b))
                    REQUIRE(nc_leq(complement(b, Side::Right), complement(a, Side::Right)));
    }
}

TEST_CASE("lattice axioms, n <= 5") {
    for (int n = 2; n <= 5; ++n) {
        auto all = enumerate_nc(n);
        for (const auto& a : all) {
            REQUIRE(nc_meet(a, a) == a);
            REQUIRE(nc_join(a, a) == a);
            for (const auto& b : all) {
                REQUIRE(nc_meet(a, b) == nc_meet(b, a));
                REQUIRE(nc_join(a, b) == nc_join(b, a));
                REQUIRE(nc_meet(a, nc_join(a, b)) == a);
                REQUIRE(nc_join(a, nc_meet(a, b)) == a);
            }
        }
    }
}

TEST_CASE("partition text round trip") {
    auto p = part(9, {{1, 3, 6}, {4, 5}});
    CHECK(p.str() == "{1,3,6|2|4,5|7|8|9}");
    CHECK(parse_partition(9, "{1,3,6|2|4,5|7|8|9}") == p);
    CHECK(parse_partition(9, "{1,3,6|4,5}") == p);  // singletons implied
    CHECK_THROWS_AS(parse_partition(4, "{1,3|2,4}"), NotNoncrossingPermutation);
    CHECK_THROWS_AS(parse_partition(4, "1,3|2"), ParseError);
    CHECK(partition_rank(p) == 3);
    CHECK(partition_rank(full_partition(5)) == 4);
    CHECK(to_permutation(p).reflection_length() == 3);
}
