#include "braids/disc.hpp"

#include <algorithm>
#include <sstream>

namespace braids {

Edge make_edge(int i, int j, int n) {
    if (i < 1 || j < 1 || i >= j || j > n)
        throw OutOfRange("edge needs 1 <= i < j <= n");
    return Edge{i, j};
}

int edge_rank(int i, int j, int n) {
    make_edge(i, j, n);
    return (i - 1) * (2 * n - i) / 2 + (j - i - 1);
}

int edge_rank(Edge e, int n) { return edge_rank(e.i, e.j, n); }

Edge rank_edge(int r, int n) {
    if (r < 0 || r >= n * (n - 1) / 2) throw OutOfRange("edge rank out of range");
    for (int i = 1; i < n; ++i) {
        int row = n - i;  // edges e_{i,i+1} .. e_{i,n}
        if (r < row) return Edge{i, i + 1 + r};
        r -= row;
    }
    throw OutOfRange("unreachable");
}

EdgePairClass classify_pair(Edge e, Edge f, int n) {
    make_edge(e.i, e.j, n);
    make_edge(f.i, f.j, n);
    if (e == f) return EdgePairClass::Identical;
    bool share_i = e.i == f.i || e.i == f.j;
    bool share_j = e.j == f.i || e.j == f.j;
    if (!share_i && !share_j) {
        // Four distinct endpoints: crossing exactly when one endpoint of f
        // lies strictly between the endpoints of e and the other does not.
        bool fi_in = e.i < f.i && f.i < e.j;
        bool fj_in = e.i < f.j && f.j < e.j;
        return fi_in != fj_in ? EdgePairClass::Crossing : EdgePairClass::Noncrossing;
    }
    int v = share_i ? e.i : e.j;          // shared endpoint
    int u = share_i ? e.j : e.i;          // remaining endpoint of e
    int w = (f.i == v) ? f.j : f.i;       // remaining endpoint of f
    int x = std::min({u, v, w});
    int z = std::max({u, v, w});
    int y = u + v + w - x - z;
    // (u,v,w) a cyclic rotation of (x,y,z) <=> the walk u -> v -> w runs
    // clockwise around the triangle.
    bool cw = (u == x && v == y && w == z) || (u == y && v == z && w == x) ||
              (u == z && v == x && w == y);
    return cw ? EdgePairClass::Clockwise : EdgePairClass::Counterclockwise;
}

Edge third_edge(Edge e, Edge f) {
    if (e == f) throw IdenticalEdges("third_edge of identical edges");
    bool share_i = e.i == f.i || e.i == f.j;
    bool share_j = e.j == f.i || e.j == f.j;
    if (share_i == share_j)
        throw NoSharedEndpoint("edges must share exactly one endpoint");
    int v = share_i ? e.i : e.j;
    int u = share_i ? e.j : e.i;
    int w = (f.i == v) ? f.j : f.i;
    return Edge{std::min(u, w), std::max(u, w)};
}

std::vector<Edge> block_edges(const std::vector<int>& block) {
    std::vector<int> b = block;
    std::sort(b.begin(), b.end());
    std::vector<Edge> edges;
    for (size_t x = 0; x < b.size(); ++x)
        for (size_t y = x + 1; y < b.size(); ++y) edges.push_back(Edge{b[x], b[y]});
    return edges;
}

std::string edge_str(Edge e) {
    std::ostringstream os;
    if (e.j <= 9)
        os << "e" << e.i << e.j;
    else
        os << "e(" << e.i << "," << e.j << ")";
    return os.str();
}

}  // namespace braids
