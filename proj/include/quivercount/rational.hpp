#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qc {

// Exact scalar domain. GMP's canonical form (coprime parts, positive
// denominator) is the class invariant; arithmetic preserves it, and
// make_rational restores it for raw numerator/denominator pairs.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(Integer num, Integer den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num.get_mpz_t(), den.get_mpz_t());
    r.canonicalize();
    return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline std::string to_string(const Integer& n) { return n.get_str(); }

}  // namespace qc
