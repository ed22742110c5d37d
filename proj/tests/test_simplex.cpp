#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "braids/simplex.hpp"

using namespace braids;

namespace {

RatNorms norms(int n, std::vector<long> values) {
    RatNorms v;
    v.n = n;
    for (long x : values) v.a.push_back(x);
    return v;
}

RatPoints random_integer_points(int n, std::mt19937_64& rng) {
    RatPoints p;
    p.n = n;
    p.coords.assign(n, std::vector<mpq_class>(n - 1, 0));
    p.weights.assign(n - 1, 1);
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n - 1; ++k)
            p.coords[i][k] = static_cast<long>(rng() % 21) - 10;
    return p;
}

}  // namespace

TEST_CASE("inner products from norms") {
    // Tetrahedron with distinct norms a..f; 2<v_ij, v_kl> = c + d - b - e.
    RatNorms v = norms(4, {2, 3, 5, 7, 11, 13});
    mpq_class ip = inner_product_from_norms(v, 1, 2, 3, 4);
    CHECK(2 * ip == mpq_class(5 + 7 - 3 - 11));
    // norm case: <v_ij, v_ij> = a_ij
    CHECK(inner_product_from_norms(v, 1, 2, 1, 2) == 2);
    // unit equilateral triangle: <v12, v23> = -1/2
    RatNorms eq = norms(3, {1, 1, 1});
    CHECK(inner_product_from_norms(eq, 1, 2, 2, 3) == mpq_class(-1, 2));
}

TEST_CASE("inner product symmetries") {
    RatNorms v = norms(4, {2, 3, 5, 7, 11, 13});
    std::mt19937_64 rng(2);
    for (int iter = 0; iter < 200; ++iter) {
        int i = 1 + rng() % 4, j = 1 + rng() % 4, k = 1 + rng() % 4, l = 1 + rng() % 4;
        REQUIRE(inner_product_from_norms(v, i, j, k, l) ==
                -inner_product_from_norms(v, j, i, k, l));
        REQUIRE(inner_product_from_norms(v, i, j, k, l) ==
                inner_product_from_norms(v, k, l, i, j));
    }
}

TEST_CASE("gram matrices") {
    auto g = gram_from_norms(norms(3, {1, 1, 1}));
    CHECK(g[0][0] == 1);
    CHECK(g[0][1] == mpq_class(1, 2));
    CHECK(g[1][0] == mpq_class(1, 2));
    CHECK(g[1][1] == 1);
    auto g2 = gram_from_norms(norms(2, {9}));
    CHECK(g2[0][0] == 9);
    auto g3 = gram_from_norms(norms(4, {1, 1, 1, 1, 1, 1}));
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c)
            CHECK(g3[r][c] == (r == c ? mpq_class(1) : mpq_class(1, 2)));
}

TEST_CASE("nondegeneracy") {
    CHECK(is_nondegenerate(norms(3, {1, 1, 1})));
    CHECK_FALSE(is_nondegenerate(norms(3, {1, 4, 1})));  // collinear
    CHECK(is_nondegenerate(norms(3, {4, 1, 3})));        // right triangle
    CHECK_THROWS_AS(is_nondegenerate(norms(3, {1, -1, 1})), NonPositiveEntry);
    CHECK_THROWS_AS(is_nondegenerate(norms(3, {1, 0, 1})), NonPositiveEntry);
    // float path with the pivot threshold
    FloatNorms f{3, {1.0, 1.0, 1.0}};
    CHECK(is_nondegenerate(f));
    FloatNorms flat{3, {1.0, 4.0, 1.0}};
    CHECK_FALSE(is_nondegenerate(flat));
}

TEST_CASE("scaling keeps nondegeneracy") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 50; ++iter) {
        RatPoints p = random_integer_points(4, rng);
        RatNorms v = norms_from_points(p);
        bool nd;
        try {
            nd = is_nondegenerate(v);
        } catch (const NonPositiveEntry&) {
            continue;  // coincident points
        }
        mpq_class s2(9, 4);
        RatNorms w = v;
        for (auto& x : w.a) x *= s2;
        bool nd2;
        try {
            nd2 = is_nondegenerate(w);
        } catch (const NonPositiveEntry&) {
            continue;
        }
        REQUIRE(nd == nd2);
    }
}

TEST_CASE("embedding the unit equilateral triangle") {
    RatPoints p = embed(norms(3, {1, 1, 1}));
    CHECK(p.coords[0] == std::vector<mpq_class>{0, 0});
    CHECK(norms_from_points(p) == norms(3, {1, 1, 1}));
    CHECK(p.weights[0] == 1);
    CHECK(p.weights[1] == mpq_class(3, 4));
    CHECK_THROWS_AS(embed(norms(3, {1, 4, 1})), DegenerateInput);
}

TEST_CASE("standard simplex norms") {
    RatPoints p;
    p.n = 3;
    p.coords = {{0, 0}, {1, 0}, {0, 1}};
    p.weights = {1, 1};
    CHECK(norms_from_points(p) == norms(3, {1, 1, 2}));
}

TEST_CASE("exact round trip on the right triangle") {
    RatNorms v = norms(3, {4, 1, 3});
    CHECK(norms_from_points(embed(v)) == v);
}

TEST_CASE("round trips on random simplices, exact and float") {
    std::mt19937_64 rng(23);
    int done = 0;
    for (int iter = 0; done < 60 && iter < 500; ++iter) {
        int n = 3 + iter % 3;
        RatPoints p = random_integer_points(n, rng);
        RatNorms v = norms_from_points(p);
        bool ok;
        try {
            ok = is_nondegenerate(v);
        } catch (const NonPositiveEntry&) {
            continue;
        }
        if (!ok) continue;
        ++done;
        REQUIRE(norms_from_points(embed(v)) == v);
        FloatPoints fp = embed_float(v);
        FloatNorms fv = norms_from_points(fp);
        for (int r = 0; r < edge_count(n); ++r) {
            double expect = v.a[r].get_d();
            REQUIRE(std::abs(fv.a[r] - expect) <= 1e-9 * expect);
        }
    }
    REQUIRE(done == 60);
}

TEST_CASE("gram from norms equals gram from coordinates") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 3 + iter % 3;
        RatPoints p = random_integer_points(n, rng);
        RatNorms v = norms_from_points(p);
        auto g = gram_from_norms(v);
        for (int r = 0; r < n - 1; ++r)
            for (int c = 0; c < n - 1; ++c) {
                mpq_class direct = 0;
                for (int k = 0; k < n - 1; ++k)
                    direct += (p.coords[r + 1][k] - p.coords[0][k]) *
                              (p.coords[c + 1][k] - p.coords[0][k]);
                REQUIRE(g[r][c] == direct);
            }
    }
}
