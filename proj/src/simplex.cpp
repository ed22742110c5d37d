#include "braids/simplex.hpp"

#include <cmath>

namespace braids {

namespace {

// LDL^T with early exit on a nonpositive pivot.  Returns true iff the
// matrix is positive definite; on success fills L (unit lower) and D.
template <class S, class PivotOK>
bool ldlt(const std::vector<std::vector<S>>& g, std::vector<std::vector<S>>& L,
          std::vector<S>& D, PivotOK pivot_ok) {
    int m = static_cast<int>(g.size());
    L.assign(m, std::vector<S>(m, S(0)));
    D.assign(m, S(0));
    for (int k = 0; k < m; ++k) {
        S d = g[k][k];
        for (int s = 0; s < k; ++s) d -= L[k][s] * L[k][s] * D[s];
        if (!pivot_ok(d)) return false;
        D[k] = d;
        L[k][k] = S(1);
        for (int i = k + 1; i < m; ++i) {
            S x = g[i][k];
            for (int s = 0; s < k; ++s) x -= L[i][s] * L[k][s] * D[s];
            L[i][k] = x / d;
        }
    }
    return true;
}

template <class S>
void check_positive(const EdgeNorms<S>& v) {
    if (static_cast<int>(v.a.size()) != edge_count(v.n))
        throw DimensionMismatch("edge norm vector has wrong length");
    for (const S& x : v.a)
        if (!(x > 0)) throw NonPositiveEntry("edge norms must be positive");
}

}  // namespace

bool is_nondegenerate(const RatNorms& v) {
    check_positive(v);
    auto g = gram_from_norms(v);
    std::vector<std::vector<mpq_class>> L;
    std::vector<mpq_class> D;
    return ldlt(g, L, D, [](const mpq_class& d) { return d > 0; });
}

bool is_nondegenerate(const FloatNorms& v) {
    check_positive(v);
    auto g = gram_from_norms(v);
    double maxdiag = 0;
    for (size_t k = 0; k < g.size(); ++k) maxdiag = std::max(maxdiag, std::fabs(g[k][k]));
    double floor = 1e-12 * maxdiag;
    std::vector<std::vector<double>> L;
    std::vector<double> D;
    return ldlt(g, L, D, [floor](double d) { return d > floor; });
}

RatPoints embed(const RatNorms& v) {
    check_positive(v);
    auto g = gram_from_norms(v);
    std::vector<std::vector<mpq_class>> L;
    std::vector<mpq_class> D;
    if (!ldlt(g, L, D, [](const mpq_class& d) { return d > 0; }))
        throw DegenerateInput("edge norms do not bound a nondegenerate simplex");
    RatPoints p;
    p.n = v.n;
    int m = v.n - 1;
    p.coords.assign(v.n, std::vector<mpq_class>(m, 0));
    for (int r = 0; r < m; ++r)
        for (int k = 0; k < m; ++k) p.coords[r + 1][k] = L[r][k];
    p.weights = D;
    return p;
}

FloatPoints to_float(const RatPoints& p) {
    FloatPoints f;
    f.n = p.n;
    int m = p.n - 1;
    f.coords.assign(p.n, std::vector<double>(m, 0.0));
    f.weights.assign(m, 1.0);
    for (int i = 0; i < p.n; ++i)
        for (int k = 0; k < m; ++k)
            f.coords[i][k] = p.coords[i][k].get_d() * std::sqrt(p.weights[k].get_d());
    return f;
}

FloatNorms to_float(const RatNorms& v) {
    FloatNorms f;
    f.n = v.n;
    f.a.reserve(v.a.size());
    for (const auto& x : v.a) f.a.push_back(x.get_d());
    return f;
}

FloatPoints embed_float(const RatNorms& v) { return to_float(embed(v)); }

}  // namespace braids
