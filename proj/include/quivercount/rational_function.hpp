#pragma once

#include <ostream>
#include <string>

#include "quivercount/polynomial.hpp"

namespace qc {

// Quotient of polynomials in reduced canonical form: numerator and
// denominator coprime, denominator monic and nonzero. Equality of values
// is therefore representation equality.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(const Polynomial& p) : num_(p), den_(1) {}  // NOLINT
    RationalFunction(const Rational& c) : num_(c), den_(1) {}    // NOLINT
    RationalFunction(long c) : num_(c), den_(1) {}               // NOLINT
    RationalFunction(Polynomial num, Polynomial den);

    /// q^k as a rational function; negative k yields 1/q^{-k}.
    static RationalFunction q_power(long k);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    bool operator==(const RationalFunction&) const = default;

    RationalFunction operator-() const;
    RationalFunction& operator+=(const RationalFunction& rhs);
    RationalFunction& operator-=(const RationalFunction& rhs);
    RationalFunction& operator*=(const RationalFunction& rhs);
    RationalFunction& operator/=(const RationalFunction& rhs);

    RationalFunction substitute_power(int s) const;

    /// Exact evaluation; throws std::domain_error at a pole.
    Rational eval(const Rational& x) const;

    std::string str(const std::string& var = "t") const;

private:
    Polynomial num_;
    Polynomial den_;
    void canonicalize();
};

RationalFunction operator+(RationalFunction a, const RationalFunction& b);
RationalFunction operator-(RationalFunction a, const RationalFunction& b);
RationalFunction operator*(RationalFunction a, const RationalFunction& b);
RationalFunction operator/(RationalFunction a, const RationalFunction& b);

RationalFunction pow(const RationalFunction& base, long exp);

/// f(f-1)(f-2)...(f-n+1)/n!; the binomial coefficient with rational-function
/// top entry. Returns 1 for n = 0.
RationalFunction binomial(const RationalFunction& f, unsigned n);

inline std::ostream& operator<<(std::ostream& os, const RationalFunction& f) {
    return os << f.str();
}

}  // namespace qc
