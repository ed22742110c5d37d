#include "braids/laurent.hpp"

#include <sstream>

namespace braids {

Laurent Laurent::monomial(const mpz_class& c, int qe, int te) {
    Laurent p;
    p.set_term({qe, te}, c);
    return p;
}

bool Laurent::is_one() const {
    return terms_.size() == 1 && terms_.begin()->first == QTExp{0, 0} &&
           terms_.begin()->second == 1;
}

bool Laurent::is_unit_monomial() const {
    if (terms_.size() != 1) return false;
    const mpz_class& c = terms_.begin()->second;
    return c == 1 || c == -1;
}

const mpz_class& Laurent::coeff(int qe, int te) const {
    static const mpz_class zero(0);
    auto it = terms_.find({qe, te});
    return it == terms_.end() ? zero : it->second;
}

void Laurent::set_term(QTExp e, const mpz_class& c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

void Laurent::add_term(QTExp e, const mpz_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Laurent& Laurent::operator+=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

Laurent Laurent::operator+(const Laurent& o) const {
    Laurent r(*this);
    r += o;
    return r;
}

Laurent Laurent::operator-(const Laurent& o) const {
    Laurent r(*this);
    r -= o;
    return r;
}

Laurent Laurent::operator-() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

Laurent Laurent::operator*(const Laurent& o) const {
    Laurent r;
    for (const auto& [ea, ca] : terms_)
        for (const auto& [eb, cb] : o.terms_)
            r.add_term({ea.q + eb.q, ea.t + eb.t}, ca * cb);
    return r;
}

Laurent& Laurent::operator*=(const Laurent& o) {
    *this = *this * o;
    return *this;
}

mpq_class pow_mpq(const mpq_class& base, int e) {
    if (e == 0) return 1;
    bool neg = e < 0;
    unsigned long k = neg ? static_cast<unsigned long>(-(long)e)
                          : static_cast<unsigned long>(e);
    if (neg && base == 0) throw ZeroBase("zero base with negative exponent");
    mpq_class r;
    mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(base.get_mpq_t()), k);
    mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(base.get_mpq_t()), k);
    if (neg) r = 1 / r;
    r.canonicalize();
    return r;
}

mpq_class Laurent::eval(const mpq_class& q0, const mpq_class& t0) const {
    mpq_class acc = 0;
    for (const auto& [e, c] : terms_) {
        if ((e.q < 0 && q0 == 0) || (e.t < 0 && t0 == 0))
            throw ZeroBase("evaluation at zero with negative exponent");
        acc += mpq_class(c) * pow_mpq(q0, e.q) * pow_mpq(t0, e.t);
    }
    return acc;
}

double Laurent::eval_double(double q0, double t0) const {
    double acc = 0;
    for (const auto& [e, c] : terms_) {
        double m = c.get_d();
        for (int k = 0; k < e.q; ++k) m *= q0;
        for (int k = 0; k > e.q; --k) m /= q0;
        for (int k = 0; k < e.t; ++k) m *= t0;
        for (int k = 0; k > e.t; --k) m /= t0;
        acc += m;
    }
    return acc;
}

Laurent Laurent::with_q_reciprocal() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[{-e.q, e.t}] = c;
    return r;
}

Laurent Laurent::at_t_one() const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.add_term({e.q, 0}, c);
    return r;
}

int Laurent::max_q_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e.q > d) d = e.q;
        first = false;
    }
    return d;
}

int Laurent::min_q_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e.q < d) d = e.q;
        first = false;
    }
    return d;
}

int Laurent::max_t_degree() const {
    int d = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first || e.t > d) d = e.t;
        first = false;
    }
    return d;
}

bool Laurent::depends_on_t() const {
    for (const auto& [e, c] : terms_)
        if (e.t != 0) return true;
    return false;
}

QTExp Laurent::min_exponents() const {
    QTExp m{0, 0};
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (first) {
            m = e;
        } else {
            m.q = std::min(m.q, e.q);
            m.t = std::min(m.t, e.t);
        }
        first = false;
    }
    return m;
}

Laurent Laurent::shifted(int dq, int dt) const {
    Laurent r;
    for (const auto& [e, c] : terms_) r.terms_[{e.q + dq, e.t + dt}] = c;
    return r;
}

mpz_class Laurent::integer_content() const {
    mpz_class g = 0;
    for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

bool Laurent::try_divide(const Laurent& a, const Laurent& d, Laurent& out) {
    if (d.is_zero()) return false;
    if (a.is_zero()) {
        out = Laurent();
        return true;
    }
    // Normalize both to honest polynomials (min exponents 0); the unit
    // shifts are tracked and reapplied to the quotient at the end.
    QTExp ma = a.min_exponents(), md = d.min_exponents();
    Laurent r = a.shifted(-ma.q, -ma.t);
    Laurent g = d.shifted(-md.q, -md.t);
    const auto& glead = *g.terms_.rbegin();  // lex-largest term
    Laurent quot;
    while (!r.is_zero()) {
        const auto& rlead = *r.terms_.rbegin();
        int dq = rlead.first.q - glead.first.q;
        int dt = rlead.first.t - glead.first.t;
        if (dq < 0 || dt < 0) return false;
        mpz_class qc, rem;
        mpz_tdiv_qr(qc.get_mpz_t(), rem.get_mpz_t(),
                    rlead.second.get_mpz_t(), glead.second.get_mpz_t());
        if (rem != 0) return false;
        Laurent term = monomial(qc, dq, dt);
        quot += term;
        r -= term * g;
    }
    out = quot.shifted(ma.q - md.q, ma.t - md.t);
    return true;
}

std::string Laurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print lex-descending so the highest q power leads.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        mpz_class ac = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        bool unit_coeff = (ac == 1) && (e.q != 0 || e.t != 0);
        if (!unit_coeff) os << ac.get_str();
        bool printed = !unit_coeff;
        auto var = [&](const char* name, int exp) {
            if (exp == 0) return;
            if (printed) os << "*";
            os << name;
            if (exp != 1) os << "^" << exp;
            printed = true;
        };
        var("q", e.q);
        var("t", e.t);
    }
    return os.str();
}

LaurentFraction::LaurentFraction(Laurent n, Laurent d)
    : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero()) throw Singular("division by zero polynomial");
    reduce();
}

void LaurentFraction::reduce() {
    if (num.is_zero()) {
        den = Laurent(1);
        return;
    }
    // Pull the denominator's monomial unit across the fraction bar.
    QTExp m = den.min_exponents();
    if (m.q != 0 || m.t != 0) {
        den = den.shifted(-m.q, -m.t);
        num = num.shifted(-m.q, -m.t);
    }
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.integer_content().get_mpz_t(),
            den.integer_content().get_mpz_t());
    if (g > 1) {
        Laurent cg(g), tmp;
        if (Laurent::try_divide(num, cg, tmp)) num = tmp;
        if (Laurent::try_divide(den, cg, tmp)) den = tmp;
    }
    Laurent quot;
    if (Laurent::try_divide(num, den, quot)) {
        num = quot;
        den = Laurent(1);
    } else if (Laurent::try_divide(den, num, quot)) {
        den = quot;
        num = Laurent(1);
    }
    // Keep the lex-leading denominator coefficient positive.
    if (den.terms().rbegin()->second < 0) {
        num = -num;
        den = -den;
    }
}

LaurentFraction LaurentFraction::operator+(const LaurentFraction& o) const {
    return LaurentFraction(num * o.den + o.num * den, den * o.den);
}

LaurentFraction LaurentFraction::operator-(const LaurentFraction& o) const {
    return LaurentFraction(num * o.den - o.num * den, den * o.den);
}

LaurentFraction LaurentFraction::operator*(const LaurentFraction& o) const {
    return LaurentFraction(num * o.num, den * o.den);
}

LaurentFraction LaurentFraction::operator/(const LaurentFraction& o) const {
    if (o.num.is_zero()) throw Singular("division by zero fraction");
    return LaurentFraction(num * o.den, den * o.num);
}

bool LaurentFraction::operator==(const LaurentFraction& o) const {
    return num * o.den == o.num * den;
}

Laurent LaurentFraction::to_laurent() const {
    if (den.is_one()) return num;
    Laurent quot;
    if (Laurent::try_divide(num, den, quot)) return quot;
    throw NonLaurentEntry("denominator " + den.str() +
                          " does not divide " + num.str());
}

}  // namespace braids
