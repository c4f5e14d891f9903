#pragma once

#include <vector>

#include "quivercount/polynomial.hpp"
#include "quivercount/rational.hpp"

namespace qc {

Integer factorial(unsigned n);

/// Number-theoretic Moebius function; 0 on arguments with a square factor.
/// Throws std::domain_error on n = 0.
int moebius_mu(unsigned n);

/// Positive divisors in ascending order.
std::vector<unsigned> divisors_of(unsigned n);

/// Gaussian binomial [m over n]_q, the polynomial counting n-dimensional
/// subspaces of F_q^m. Requires n <= m.
Polynomial gaussian_binomial(unsigned m, unsigned n);

// Weakly decreasing positive parts.
struct Partition {
    std::vector<int> parts;

    int length() const { return static_cast<int>(parts.size()); }
    int weight() const;
    int multiplicity(int part) const;
    /// l(lambda)! / prod_i mult_i(lambda)! -- distinct orderings of the parts.
    Integer ordering_count() const;

    bool operator==(const Partition&) const = default;
};

/// All partitions of n, each once, in lexicographically decreasing order.
/// partitions_of(0) holds exactly the empty partition.
std::vector<Partition> partitions_of(int n);

}  // namespace qc
