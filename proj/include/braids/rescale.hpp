#pragma once

#include <random>
#include <vector>

#include "braids/matrix.hpp"
#include "braids/noncrossing.hpp"
#include "braids/simplex.hpp"

namespace braids {

// A q-rescaling R^scaled_fixed: edges inside blocks of `scaled` stretch by
// q, edges inside blocks of `fixed` keep length and direction.  Valid only
// when the non-singleton blocks of both partitions assemble into a spanning
// hypertree of {1..n}: the per-block ranks sum to n-1 and the block union
// is connected.
struct RescalingSpec {
    int n = 0;
    NCPartition scaled;
    NCPartition fixed;
};

struct TreeEdge {
    Edge e;
    bool scaled_by_q = false;
};

// A spanning tree on {1..n} whose every edge lies inside a block of the
// spec, each tagged with that block's factor.
struct SpanningTreePlan {
    int n = 0;
    std::vector<TreeEdge> edges;
};

// Throws NotHypertree when the blocks fail the rank or connectivity test.
void validate_spec(const RescalingSpec& spec);

// Deterministic tree: within each non-singleton block b1 < ... < bm, the
// path edges (b1,b2), ..., (b_{m-1},b_m).
SpanningTreePlan build_tree(const RescalingSpec& spec);

// Random spanning tree drawn from intra-block edges; exercises the
// tree-independence of the rescaling matrix.
SpanningTreePlan random_tree(const RescalingSpec& spec, std::mt19937_64& rng);

// The N x N matrix over Z[q] acting on edge norm vectors: each row expands
// the rescaled norm of one edge through tree paths and the inner-product
// formula.  Entries have q-degree at most 2.
SymMatrix matrix_from_tree(const SpanningTreePlan& tree);
SymMatrix rescaling_matrix(const RescalingSpec& spec);

// Geometric oracle: reposition vertices so each tree edge keeps its
// direction and scales by its factor evaluated at q0; vertex 1 stays put.
RatPoints rescale_points(const RatPoints& p, const SpanningTreePlan& tree,
                         const mpq_class& q0);

// Same, with an arbitrary positive factor per tree edge.
RatPoints rescale_points_general(const RatPoints& p, const std::vector<Edge>& edges,
                                 const std::vector<mpq_class>& factors);

}  // namespace braids
