#include "braids/rescale.hpp"

#include <algorithm>
#include <numeric>

namespace braids {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

std::vector<const std::vector<int>*> nonsingleton_blocks(const RescalingSpec& spec) {
    std::vector<const std::vector<int>*> out;
    for (const auto& b : spec.scaled.blocks)
        if (b.size() >= 2) out.push_back(&b);
    for (const auto& b : spec.fixed.blocks)
        if (b.size() >= 2) out.push_back(&b);
    return out;
}

}  // namespace

void validate_spec(const RescalingSpec& spec) {
    if (spec.scaled.n != spec.n || spec.fixed.n != spec.n)
        throw DimensionMismatch("rescaling spec partitions disagree on n");
    int rank = 0;
    UnionFind uf(spec.n);
    int components = spec.n;
    for (const auto* b : nonsingleton_blocks(spec)) {
        rank += static_cast<int>(b->size()) - 1;
        for (size_t i = 1; i < b->size(); ++i)
            if (uf.unite((*b)[0] - 1, (*b)[i] - 1)) --components;
    }
    if (rank != spec.n - 1 || components != 1)
        throw NotHypertree("blocks of " + spec.scaled.str() + " and " + spec.fixed.str() +
                           " do not form a spanning hypertree");
}

SpanningTreePlan build_tree(const RescalingSpec& spec) {
    validate_spec(spec);
    SpanningTreePlan plan;
    plan.n = spec.n;
    auto add_block_paths = [&](const NCPartition& part, bool scaled) {
        for (const auto& b : part.blocks)
            for (size_t i = 0; i + 1 < b.size(); ++i)
                plan.edges.push_back({Edge{b[i], b[i + 1]}, scaled});
    };
    add_block_paths(spec.scaled, true);
    add_block_paths(spec.fixed, false);
    return plan;
}

SpanningTreePlan random_tree(const RescalingSpec& spec, std::mt19937_64& rng) {
    validate_spec(spec);
    SpanningTreePlan plan;
    plan.n = spec.n;
    auto add_block_tree = [&](const std::vector<int>& b, bool scaled) {
        if (b.size() < 2) return;
        std::vector<int> in = {b[0]};
        std::vector<int> out(b.begin() + 1, b.end());
        while (!out.empty()) {
            size_t ui = rng() % in.size();
            size_t vi = rng() % out.size();
            int u = in[ui], v = out[vi];
            plan.edges.push_back({Edge{std::min(u, v), std::max(u, v)}, scaled});
            in.push_back(v);
            out.erase(out.begin() + vi);
        }
    };
    for (const auto& b : spec.scaled.blocks) add_block_tree(b, true);
    for (const auto& b : spec.fixed.blocks) add_block_tree(b, false);
    return plan;
}

namespace {

// Directed step along a tree edge, carrying the edge's scale factor.
struct Step {
    int from, to;
    bool scaled;
};

struct TreeWalk {
    int n;
    std::vector<std::vector<std::pair<int, bool>>> adj;  // vertex -> (next, scaled)
    std::vector<int> parent;        // BFS parent, root 1
    std::vector<bool> parent_scaled;
    std::vector<int> depth;

    explicit TreeWalk(const SpanningTreePlan& tree) : n(tree.n) {
        if (static_cast<int>(tree.edges.size()) != n - 1)
            throw NotHypertree("tree plan has wrong edge count");
        adj.assign(n + 1, {});
        UnionFind uf(n);
        for (const auto& te : tree.edges) {
            make_edge(te.e.i, te.e.j, n);
            if (!uf.unite(te.e.i - 1, te.e.j - 1))
                throw NotHypertree("tree plan contains a cycle");
            adj[te.e.i].push_back({te.e.j, te.scaled_by_q});
            adj[te.e.j].push_back({te.e.i, te.scaled_by_q});
        }
        parent.assign(n + 1, 0);
        parent_scaled.assign(n + 1, false);
        depth.assign(n + 1, 0);
        std::vector<int> queue = {1};
        std::vector<bool> seen(n + 1, false);
        seen[1] = true;
        for (size_t h = 0; h < queue.size(); ++h) {
            int u = queue[h];
            for (auto [v, sc] : adj[u]) {
                if (seen[v]) continue;
                seen[v] = true;
                parent[v] = u;
                parent_scaled[v] = sc;
                depth[v] = depth[u] + 1;
                queue.push_back(v);
            }
        }
    }

    // Tree path k -> l as directed steps.
    std::vector<Step> path(int k, int l) const {
        std::vector<Step> up, down;
        int a = k, b = l;
        while (depth[a] > depth[b]) {
            up.push_back({a, parent[a], parent_scaled[a]});
            a = parent[a];
        }
        while (depth[b] > depth[a]) {
            down.push_back({parent[b], b, parent_scaled[b]});
            b = parent[b];
        }
        while (a != b) {
            up.push_back({a, parent[a], parent_scaled[a]});
            a = parent[a];
            down.push_back({parent[b], b, parent_scaled[b]});
            b = parent[b];
        }
        std::reverse(down.begin(), down.end());
        up.insert(up.end(), down.begin(), down.end());
        return up;
    }
};

}  // namespace

SymMatrix matrix_from_tree(const SpanningTreePlan& tree) {
    TreeWalk walk(tree);
    int n = tree.n;
    SymMatrix m(n);
    Laurent q = Laurent::q();
    Laurent one(1);
    for (int k = 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
            int row = edge_rank(k, l, n);
            auto steps = walk.path(k, l);
            auto add = [&](int x, int y, const Laurent& c) {
                if (x == y) return;
                int col = edge_rank(std::min(x, y), std::max(x, y), n);
                m.at(row, col) += c;
            };
            for (size_t s = 0; s < steps.size(); ++s) {
                const Laurent& fs = steps[s].scaled ? q : one;
                add(steps[s].from, steps[s].to, fs * fs);
                for (size_t r = s + 1; r < steps.size(); ++r) {
                    // 2<v_ab, v_cd> = a_ad + a_bc - a_ac - a_bd
                    const Laurent& fr = steps[r].scaled ? q : one;
                    Laurent c = fs * fr;
                    add(steps[s].from, steps[r].to, c);
                    add(steps[s].to, steps[r].from, c);
                    add(steps[s].from, steps[r].from, -c);
                    add(steps[s].to, steps[r].to, -c);
                }
            }
        }
    return m;
}

SymMatrix rescaling_matrix(const RescalingSpec& spec) {
    return matrix_from_tree(build_tree(spec));
}

namespace {

RatPoints rescale_with_factors(const RatPoints& p,
                               const std::vector<std::pair<Edge, mpq_class>>& edges) {
    int n = p.n;
    std::vector<std::vector<std::pair<int, mpq_class>>> adj(n + 1);
    UnionFind uf(n);
    for (const auto& [e, f] : edges) {
        make_edge(e.i, e.j, n);
        if (!(f > 0)) throw NonPositiveEntry("scale factors must be positive");
        if (!uf.unite(e.i - 1, e.j - 1)) throw NotHypertree("rescale tree has a cycle");
        adj[e.i].push_back({e.j, f});
        adj[e.j].push_back({e.i, f});
    }
    if (static_cast<int>(edges.size()) != n - 1)
        throw NotHypertree("rescale tree has wrong edge count");
    RatPoints out = p;
    std::vector<bool> seen(n + 1, false);
    std::vector<int> queue = {1};
    seen[1] = true;
    for (size_t h = 0; h < queue.size(); ++h) {
        int u = queue[h];
        for (const auto& [v, f] : adj[u]) {
            if (seen[v]) continue;
            seen[v] = true;
            for (int k = 0; k < n - 1; ++k)
                out.coords[v - 1][k] =
                    out.coords[u - 1][k] + f * (p.coords[v - 1][k] - p.coords[u - 1][k]);
            queue.push_back(v);
        }
    }
    return out;
}

}  // namespace

RatPoints rescale_points(const RatPoints& p, const SpanningTreePlan& tree,
                         const mpq_class& q0) {
    if (p.n != tree.n) throw DimensionMismatch("points and tree disagree on n");
    std::vector<std::pair<Edge, mpq_class>> edges;
    for (const auto& te : tree.edges)
        edges.push_back({te.e, te.scaled_by_q ? q0 : mpq_class(1)});
    return rescale_with_factors(p, edges);
}

RatPoints rescale_points_general(const RatPoints& p, const std::vector<Edge>& edges,
                                 const std::vector<mpq_class>& factors) {
    if (edges.size() != factors.size())
        throw DimensionMismatch("one factor per tree edge required");
    std::vector<std::pair<Edge, mpq_class>> pairs;
    for (size_t i = 0; i < edges.size(); ++i) pairs.push_back({edges[i], factors[i]});
    return rescale_with_factors(p, pairs);
}

}  // namespace braids
