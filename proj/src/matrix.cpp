#include "braids/matrix.hpp"

namespace braids {

RatMatrix inverse(const RatMatrix& m) {
    int d = m.dim();
    std::vector<mpq_class> a(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) a[static_cast<size_t>(i) * d + j] = m.at(i, j);
    auto inv = detail::gauss_jordan(
        std::move(a), d, mpq_class(0), mpq_class(1),
        [](const mpq_class& x) { return x == 0; },
        [](const mpq_class&) { return size_t{1}; });
    RatMatrix r(m.n());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) r.at(i, j) = inv[static_cast<size_t>(i) * d + j];
    return r;
}

FloatMatrix inverse(const FloatMatrix& m) {
    int n = m.dim();
    std::vector<std::vector<double>> a(n, std::vector<double>(2 * n, 0.0));
    double scale = 0.0;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            a[i][j] = m.at(i, j);
            scale = std::max(scale, std::fabs(a[i][j]));
        }
        a[i][n + i] = 1.0;
    }
    if (scale == 0.0 && n > 0) throw Singular("zero matrix");
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int r = k + 1; r < n; ++r)
            if (std::fabs(a[r][k]) > std::fabs(a[piv][k])) piv = r;
        if (std::fabs(a[piv][k]) < 1e-12 * scale)
            throw Singular("matrix numerically singular");
        std::swap(a[piv], a[k]);
        double p = a[k][k];
        for (int c = 0; c < 2 * n; ++c) a[k][c] /= p;
        for (int r = 0; r < n; ++r) {
            if (r == k || a[r][k] == 0.0) continue;
            double f = a[r][k];
            for (int c = 0; c < 2 * n; ++c) a[r][c] -= f * a[k][c];
        }
    }
    FloatMatrix out(m.n());
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out.at(i, j) = a[i][n + j];
    return out;
}

Laurent determinant(const SymMatrix& m) {
    int n = m.dim();
    if (n == 0) return Laurent(1);
    std::vector<Laurent> a(static_cast<size_t>(n) * n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = m.at(i, j);
    auto A = [&](int r, int c) -> Laurent& {
        return a[static_cast<size_t>(r) * n + c];
    };
    Laurent prev(1);
    int sign = 1;
    for (int k = 0; k + 1 < n; ++k) {
        if (A(k, k).is_zero()) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (!A(r, k).is_zero()) {
                    piv = r;
                    break;
                }
            if (piv < 0) return Laurent(0);
            for (int c = 0; c < n; ++c) std::swap(A(piv, c), A(k, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Laurent num = A(i, j) * A(k, k) - A(i, k) * A(k, j);
                Laurent quot;
                if (!Laurent::try_divide(num, prev, quot))
                    throw InternalError("Bareiss division not exact");
                A(i, j) = quot;
            }
        prev = A(k, k);
    }
    Laurent det = A(n - 1, n - 1);
    return sign < 0 ? -det : det;
}

bool approx_equal(const FloatMatrix& a, const FloatMatrix& b, double rtol) {
    if (a.n() != b.n()) return false;
    double scale = 0.0;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            scale = std::max({scale, std::fabs(a.at(i, j)), std::fabs(b.at(i, j))});
    if (scale == 0.0) return true;
    for (int i = 0; i < a.dim(); ++i)
        for (int j = 0; j < a.dim(); ++j)
            if (std::fabs(a.at(i, j) - b.at(i, j)) > rtol * scale) return false;
    return true;
}

}  // namespace braids
