#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

#include "braids/disc.hpp"
#include "braids/errors.hpp"
#include "braids/laurent.hpp"

namespace braids {

// Square matrix indexed by the N = n(n-1)/2 edges of the punctured disc in
// their lexicographic order.  The scalar type is the domain: Laurent for
// symbolic work, mpq_class for exact evaluation, double for export.
template <class S>
class EdgeMatrix {
  public:
    explicit EdgeMatrix(int n)
        : n_(n), dim_(edge_count(n)), a_(static_cast<size_t>(dim_) * dim_) {
        if (n < 1) throw OutOfRange("vertex count must be >= 1");
    }

    static EdgeMatrix identity(int n) {
        EdgeMatrix m(n);
        for (int i = 0; i < m.dim_; ++i) m.at(i, i) = S(1);
        return m;
    }

    int n() const { return n_; }
    int dim() const { return dim_; }

    S& at(int r, int c) { return a_[static_cast<size_t>(r) * dim_ + c]; }
    const S& at(int r, int c) const {
        return a_[static_cast<size_t>(r) * dim_ + c];
    }

    EdgeMatrix operator*(const EdgeMatrix& o) const {
        if (n_ != o.n_)
            throw DimensionMismatch("matrix product needs equal vertex counts");
        EdgeMatrix r(n_);
        for (int i = 0; i < dim_; ++i)
            for (int k = 0; k < dim_; ++k) {
                const S& aik = at(i, k);
                if (aik == S(0)) continue;
                for (int j = 0; j < dim_; ++j) {
                    const S& bkj = o.at(k, j);
                    if (bkj == S(0)) continue;
                    r.at(i, j) += aik * bkj;
                }
            }
        return r;
    }

    bool operator==(const EdgeMatrix& o) const {
        return n_ == o.n_ && a_ == o.a_;
    }

    // Left action on an edge-norm column vector.
    std::vector<S> apply(const std::vector<S>& v) const {
        if (static_cast<int>(v.size()) != dim_)
            throw DimensionMismatch("vector length does not match edge count");
        std::vector<S> r(dim_, S(0));
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) r[i] += at(i, j) * v[j];
        return r;
    }

    template <class U, class F>
    EdgeMatrix<U> map(F f) const {
        EdgeMatrix<U> r(n_);
        for (int i = 0; i < dim_; ++i)
            for (int j = 0; j < dim_; ++j) r.at(i, j) = f(at(i, j));
        return r;
    }

  private:
    int n_;
    int dim_;
    std::vector<S> a_;
};

using SymMatrix = EdgeMatrix<Laurent>;
using RatMatrix = EdgeMatrix<mpq_class>;
using FloatMatrix = EdgeMatrix<double>;

inline RatMatrix eval_matrix(const SymMatrix& m, const mpq_class& q0,
                             const mpq_class& t0 = 1) {
    return m.map<mpq_class>([&](const Laurent& p) { return p.eval(q0, t0); });
}

inline FloatMatrix to_float(const RatMatrix& m) {
    return m.map<double>([](const mpq_class& x) { return x.get_d(); });
}

inline SymMatrix at_t_one(const SymMatrix& m) {
    return m.map<Laurent>([](const Laurent& p) { return p.at_t_one(); });
}

inline SymMatrix with_q_reciprocal(const SymMatrix& m) {
    return m.map<Laurent>([](const Laurent& p) { return p.with_q_reciprocal(); });
}

namespace detail {

// Gauss-Jordan over an exact field.  `Weight` steers pivot choice toward
// the structurally simplest nonzero entry, which keeps symbolic fractions
// small on the sparse quasi-permutation matrices this library produces.
template <class F, class IsZero, class Weight>
std::vector<F> gauss_jordan(std::vector<F> a, int n, const F& zero,
                            const F& one, IsZero is_zero, Weight weight) {
    std::vector<F> inv(static_cast<size_t>(n) * n, zero);
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(i) * n + i] = one;
    auto A = [&](int r, int c) -> F& { return a[static_cast<size_t>(r) * n + c]; };
    auto B = [&](int r, int c) -> F& { return inv[static_cast<size_t>(r) * n + c]; };
    for (int k = 0; k < n; ++k) {
        int piv = -1;
        size_t best = 0;
        for (int r = k; r < n; ++r) {
            if (is_zero(A(r, k))) continue;
            size_t w = weight(A(r, k));
            if (piv < 0 || w < best) {
                piv = r;
                best = w;
            }
        }
        if (piv < 0) throw Singular("matrix is singular");
        if (piv != k) {
            for (int c = 0; c < n; ++c) {
                std::swap(A(piv, c), A(k, c));
                std::swap(B(piv, c), B(k, c));
            }
        }
        F p = A(k, k);
        for (int c = 0; c < n; ++c) {
            A(k, c) = A(k, c) / p;
            B(k, c) = B(k, c) / p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == k || is_zero(A(r, k))) continue;
            F f = A(r, k);
            for (int c = 0; c < n; ++c) {
                A(r, c) = A(r, c) - f * A(k, c);
                B(r, c) = B(r, c) - f * B(k, c);
            }
        }
    }
    return inv;
}

}  // namespace detail

// Fraction-field elimination followed by the check that every entry of the
// inverse is an honest Laurent polynomial.  Generator matrices have unit
// monomial determinants, so a NonLaurentEntry here signals a bug upstream.
inline SymMatrix inverse(const SymMatrix& m) {
    int d = m.dim();
    std::vector<LaurentFraction> a(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            a[static_cast<size_t>(i) * d + j] = LaurentFraction(m.at(i, j));
    auto inv = detail::gauss_jordan(
        std::move(a), d, LaurentFraction(Laurent(0)),
        LaurentFraction(Laurent(1)),
        [](const LaurentFraction& x) { return x.is_zero(); },
        [](const LaurentFraction& x) { return x.weight(); });
    SymMatrix r(m.n());
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j)
            r.at(i, j) = inv[static_cast<size_t>(i) * d + j].to_laurent();
    return r;
}

RatMatrix inverse(const RatMatrix& m);
FloatMatrix inverse(const FloatMatrix& m);

// Fraction-free Bareiss determinant over the Laurent ring.
Laurent determinant(const SymMatrix& m);

bool approx_equal(const FloatMatrix& a, const FloatMatrix& b, double rtol);

}  // namespace braids
