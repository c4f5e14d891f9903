#include "quivercount/rational_function.hpp"

#include <stdexcept>

namespace qc {

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("rational function with zero denominator");
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = Polynomial(1);
        return;
    }
    Polynomial g = gcd(num_, den_);
    if (g.degree() > 0) {
        num_ = exact_divide(num_, g);
        den_ = exact_divide(den_, g);
    }
    Rational lead = den_.leading();
    if (lead != 1) {
        Rational inv = Rational(1) / lead;
        num_ *= inv;
        den_ *= inv;
    }
}

RationalFunction RationalFunction::q_power(long k) {
    if (k >= 0) return RationalFunction(Polynomial::monomial(static_cast<int>(k)));
    return RationalFunction(Polynomial(1), Polynomial::monomial(static_cast<int>(-k)));
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& rhs) {
    // a/b + c/d = (a*(d/g) + c*(b/g)) / (b*(d/g)) with g = gcd(b,d)
    Polynomial g = gcd(den_, rhs.den_);
    Polynomial d_over_g = exact_divide(rhs.den_, g);
    num_ = num_ * d_over_g + rhs.num_ * exact_divide(den_, g);
    den_ = den_ * d_over_g;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& rhs) {
    return *this += -rhs;
}

RationalFunction& RationalFunction::operator*=(const RationalFunction& rhs) {
    // cross-reduce before multiplying to limit degree growth
    Polynomial g1 = gcd(num_, rhs.den_);
    Polynomial g2 = gcd(rhs.num_, den_);
    Polynomial a = g1.degree() > 0 ? exact_divide(num_, g1) : num_;
    Polynomial d = g1.degree() > 0 ? exact_divide(rhs.den_, g1) : rhs.den_;
    Polynomial c = g2.degree() > 0 ? exact_divide(rhs.num_, g2) : rhs.num_;
    Polynomial b = g2.degree() > 0 ? exact_divide(den_, g2) : den_;
    num_ = a * c;
    den_ = b * d;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& rhs) {
    if (rhs.is_zero()) throw std::domain_error("division by the zero rational function");
    return *this *= RationalFunction(rhs.den_, rhs.num_);
}

RationalFunction RationalFunction::substitute_power(int s) const {
    return RationalFunction(num_.substitute_power(s), den_.substitute_power(s));
}

Rational RationalFunction::eval(const Rational& x) const {
    Rational d = den_.eval(x);
    if (d == 0) throw std::domain_error("pole of rational function at " + x.get_str());
    return num_.eval(x) / d;
}

std::string RationalFunction::str(const std::string& var) const {
    if (is_polynomial()) return num_.str(var);
    return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }

RationalFunction pow(const RationalFunction& base, long exp) {
    if (exp < 0) {
        if (base.is_zero()) throw std::domain_error("negative power of zero");
        return pow(RationalFunction(base.den(), base.num()), -exp);
    }
    RationalFunction result(1);
    RationalFunction b = base;
    auto e = static_cast<unsigned long>(exp);
    while (e > 0) {
        if (e & 1ul) result *= b;
        e >>= 1ul;
        if (e > 0) b *= b;
    }
    return result;
}

RationalFunction binomial(const RationalFunction& f, unsigned n) {
    RationalFunction result(1);
    Rational nfact(1);
    for (unsigned i = 0; i < n; ++i) {
        result *= f - RationalFunction(Rational(i));
        nfact *= static_cast<long>(i + 1);
    }
    result *= RationalFunction(Rational(1) / nfact);
    return result;
}

}  // namespace qc
