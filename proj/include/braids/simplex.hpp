#pragma once

#include <gmpxx.h>

#include <vector>

#include "braids/disc.hpp"
#include "braids/errors.hpp"

namespace braids {

// Edge norm vector: the squared edge lengths of a labeled simplex with n
// vertices, in lexicographic edge order.
template <class S>
struct EdgeNorms {
    int n = 0;
    std::vector<S> a;  // size n(n-1)/2

    bool operator==(const EdgeNorms&) const = default;
};

using RatNorms = EdgeNorms<mpq_class>;
using FloatNorms = EdgeNorms<double>;

// Labeled point configuration.  Coordinates live in a frame whose inner
// product is diagonal with the given positive weights; this keeps exact
// embeddings inside the rationals (LDL^T instead of a square-root Cholesky).
// A weight vector of all ones is the ordinary orthonormal frame.
template <class S>
struct PointConfig {
    int n = 0;
    std::vector<std::vector<S>> coords;  // n rows of length n-1
    std::vector<S> weights;              // n-1 positive metric weights
};

using RatPoints = PointConfig<mpq_class>;
using FloatPoints = PointConfig<double>;

// <v_ij, v_kl> = (a_il + a_jk - a_ik - a_jl) / 2, indices may repeat and
// a_xx reads as zero.
template <class S>
S inner_product_from_norms(const EdgeNorms<S>& v, int i, int j, int k, int l) {
    auto norm = [&](int x, int y) -> S {
        if (x == y) return S(0);
        return v.a[edge_rank(std::min(x, y), std::max(x, y), v.n)];
    };
    return (norm(i, l) + norm(j, k) - norm(i, k) - norm(j, l)) / 2;
}

// Gram matrix of the vectors v_{1,2}, ..., v_{1,n} computed from norms.
template <class S>
std::vector<std::vector<S>> gram_from_norms(const EdgeNorms<S>& v) {
    int m = v.n - 1;
    std::vector<std::vector<S>> g(m, std::vector<S>(m, S(0)));
    for (int r = 0; r < m; ++r)
        for (int c = 0; c < m; ++c)
            g[r][c] = inner_product_from_norms(v, 1, r + 2, 1, c + 2);
    return g;
}

template <class S>
EdgeNorms<S> norms_from_points(const PointConfig<S>& p) {
    EdgeNorms<S> v;
    v.n = p.n;
    v.a.assign(edge_count(p.n), S(0));
    for (int i = 1; i <= p.n; ++i)
        for (int j = i + 1; j <= p.n; ++j) {
            S acc(0);
            for (int k = 0; k < p.n - 1; ++k) {
                S d = p.coords[i - 1][k] - p.coords[j - 1][k];
                acc += d * d * p.weights[k];
            }
            v.a[edge_rank(i, j, p.n)] = acc;
        }
    return v;
}

// Positive-definiteness of the Gram matrix, tested exactly through LDL^T
// pivots.  Throws NonPositiveEntry if some squared length is not positive.
bool is_nondegenerate(const RatNorms& v);
// Float variant: pivots are compared against 1e-12 times the largest
// diagonal entry.
bool is_nondegenerate(const FloatNorms& v);

// Canonical frame embedding: vertex 1 at the origin, remaining coordinates
// from the LDL^T factor of the Gram matrix.  Exact; DegenerateInput when the
// norms do not describe a nondegenerate simplex.
RatPoints embed(const RatNorms& v);
FloatPoints embed_float(const RatNorms& v);

// Convert a weighted-frame rational configuration to orthonormal floats.
FloatPoints to_float(const RatPoints& p);
FloatNorms to_float(const RatNorms& v);

}  // namespace braids
