#pragma once

#include <gmpxx.h>

#include <compare>
#include <map>
#include <string>

#include "braids/errors.hpp"

namespace braids {

// Exponent pair of a monomial c * q^q t^t.  Ordered lexicographically with
// q major; that order is what the exact-division routine pivots on.
struct QTExp {
    int q = 0;
    int t = 0;
    auto operator<=>(const QTExp&) const = default;
};

// Laurent polynomial in q and t with arbitrary-precision integer
// coefficients.  Canonical form: zero coefficients are never stored, so
// structural map equality is ring equality.
class Laurent {
  public:
    using TermMap = std::map<QTExp, mpz_class>;

    Laurent() = default;
    Laurent(long v) { set_term({0, 0}, mpz_class(v)); }
    Laurent(const mpz_class& v) { set_term({0, 0}, v); }

    static Laurent q(int e = 1) { return monomial(1, e, 0); }
    static Laurent t(int e = 1) { return monomial(1, 0, e); }
    static Laurent monomial(const mpz_class& c, int qe, int te = 0);

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    // Single term with coefficient +1 or -1 (a unit of the Laurent ring up
    // to sign); such entries are what invertibility over the ring demands.
    bool is_unit_monomial() const;

    const TermMap& terms() const { return terms_; }
    const mpz_class& coeff(int qe, int te = 0) const;

    Laurent& operator+=(const Laurent& o);
    Laurent& operator-=(const Laurent& o);
    Laurent operator+(const Laurent& o) const;
    Laurent operator-(const Laurent& o) const;
    Laurent operator-() const;
    Laurent operator*(const Laurent& o) const;
    Laurent& operator*=(const Laurent& o);
    bool operator==(const Laurent& o) const { return terms_ == o.terms_; }

    // Exact substitution over the rationals.  Throws ZeroBase if a zero
    // base meets a negative exponent.
    mpq_class eval(const mpq_class& q0, const mpq_class& t0 = 1) const;
    double eval_double(double q0, double t0 = 1.0) const;

    Laurent with_q_reciprocal() const;  // q -> 1/q
    Laurent at_t_one() const;           // t -> 1, collapsing terms

    // Degree queries return 0 on the zero polynomial.
    int max_q_degree() const;
    int min_q_degree() const;
    int max_t_degree() const;
    bool depends_on_t() const;

    QTExp min_exponents() const;
    Laurent shifted(int dq, int dt) const;  // multiply by q^dq t^dt
    mpz_class integer_content() const;      // gcd of coefficients, >= 0

    // Exact division in the Laurent ring.  Returns false (and leaves `out`
    // unspecified) when `a` is not a multiple of `d`.
    static bool try_divide(const Laurent& a, const Laurent& d, Laurent& out);

    std::string str() const;

  private:
    void set_term(QTExp e, const mpz_class& c);
    void add_term(QTExp e, const mpz_class& c);

    TermMap terms_;
};

inline Laurent operator*(const mpz_class& c, const Laurent& p) {
    return Laurent(c) * p;
}

// Raise a nonzero rational to an integer power; e < 0 inverts.
mpq_class pow_mpq(const mpq_class& base, int e);

// Quotient of two Laurent polynomials, the working scalar during
// fraction-field Gaussian elimination.  Reduction is lazy: units, integer
// content and whole-polynomial trial division; no multivariate gcd.
struct LaurentFraction {
    Laurent num;
    Laurent den = Laurent(1);

    LaurentFraction() = default;
    LaurentFraction(Laurent n) : num(std::move(n)) {}
    LaurentFraction(Laurent n, Laurent d);

    bool is_zero() const { return num.is_zero(); }

    LaurentFraction operator+(const LaurentFraction& o) const;
    LaurentFraction operator-(const LaurentFraction& o) const;
    LaurentFraction operator*(const LaurentFraction& o) const;
    LaurentFraction operator/(const LaurentFraction& o) const;
    bool operator==(const LaurentFraction& o) const;

    // Throws NonLaurentEntry if the reduced denominator is not 1.
    Laurent to_laurent() const;

    size_t weight() const { return num.terms().size() + den.terms().size(); }

  private:
    void reduce();
};

}  // namespace braids
