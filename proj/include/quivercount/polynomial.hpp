#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "quivercount/rational.hpp"

namespace qc {

// Univariate polynomial over Q with dense coefficients in ascending order.
// Canonical form: the highest stored coefficient is nonzero; the zero
// polynomial is the empty coefficient vector and reports degree -1.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)
    Polynomial(long constant);             // NOLINT(google-explicit-constructor)
    explicit Polynomial(std::vector<Rational> coeffs);

    static Polynomial variable();
    static Polynomial monomial(int degree, const Rational& coeff = 1);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    bool is_constant() const { return coeffs_.size() <= 1; }
    const Rational& leading() const;
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool operator==(const Polynomial&) const = default;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    Polynomial& operator*=(const Polynomial& rhs);
    Polynomial& operator*=(const Rational& scalar);

    /// Substitute q -> q^s (s >= 1).
    Polynomial substitute_power(int s) const;

    Rational eval(const Rational& x) const;

    bool has_integer_coefficients() const;

    /// Rendered with terms in decreasing degree, e.g. "t^5 - t^2".
    std::string str(const std::string& var = "t") const;

private:
    std::vector<Rational> coeffs_;
    void trim();
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& s, Polynomial p);

/// Field division with remainder: a = quo*b + rem, deg rem < deg b.
void divmod(const Polynomial& a, const Polynomial& b, Polynomial& quo, Polynomial& rem);

/// Quotient of an exact division; throws std::domain_error on a nonzero remainder.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Monic greatest common divisor; gcd(0,0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);

Polynomial pow(const Polynomial& base, unsigned exp);

/// Inverse of str(): accepts the terms this library prints, e.g. "t^2 + t + 1",
/// "-3*t^4 + 1/2", "0". Throws std::invalid_argument on malformed input.
Polynomial parse_polynomial(const std::string& text, const std::string& var = "t");

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << p.str();
}

}  // namespace qc
