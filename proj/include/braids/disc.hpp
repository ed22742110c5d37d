#pragma once

#include <string>
#include <vector>

#include "braids/errors.hpp"

namespace braids {

// Number of edges of the disc with n punctures.
inline int edge_count(int n) { return n * (n - 1) / 2; }

// Edge of the convexly punctured disc, standard name with i < j.
struct Edge {
    int i = 1;
    int j = 2;
    bool operator==(const Edge&) const = default;
};

// How an ordered pair of edges sits in the disc.  For a pair (e, f) with a
// shared endpoint, Clockwise means f is to the right of e and
// Counterclockwise means f is to the left of e.
enum class EdgePairClass { Identical, Crossing, Noncrossing, Clockwise, Counterclockwise };

Edge make_edge(int i, int j, int n);  // validates 1 <= i < j <= n

// Lexicographic position of e_ij among the N = n(n-1)/2 edges, 0-based,
// and its inverse.
int edge_rank(int i, int j, int n);
int edge_rank(Edge e, int n);
Edge rank_edge(int r, int n);

// Vertices sit at positions 1..n in clockwise cyclic order.  For edges
// sharing one endpoint v with the remaining endpoints u (on e) and w (on f),
// the pair (e, f) is clockwise exactly when (u, v, w) is a cyclic rotation
// of the increasingly-ordered endpoint triple.  Calibrated against the
// orientation data of the punctured-disc figure with n = 9.
EdgePairClass classify_pair(Edge e, Edge f, int n);

// The edge joining the two non-shared endpoints of e and f.
Edge third_edge(Edge e, Edge f);

// All edges with both endpoints in `block`, lexicographically.
std::vector<Edge> block_edges(const std::vector<int>& block);

std::string edge_str(Edge e);  // "e12", or "e(10,12)" once labels pass 9

}  // namespace braids
