#pragma once

#include <map>
#include <vector>

#include "quivercount/rational_function.hpp"

namespace qc {

// Truncated one-variable series for the m-loop quiver, indexed by total
// dimension. coeffs[0] must be 1 for an invertible series.
struct LoopSeries {
    int loops;
    std::vector<RationalFunction> coeffs;

    int bound() const { return static_cast<int>(coeffs.size()) - 1; }
    bool operator==(const LoopSeries&) const = default;
};

/// q^{(1-m) d(d-1)/2}: the factor identifying t^d in the twisted algebra of
/// the m-loop quiver with an ordinary power series monomial.
RationalFunction untwist_factor(int loops, int d);

/// Ordinary series inverse via the partition expansion
/// (1 + sum a_d t^d)^{-1} = sum_lambda (-1)^{l} multinomial(l; mults) prod a_{lambda_i} t^{|lambda|}.
LoopSeries partition_inverse(const LoopSeries& a);

// Counting polynomials of the m-loop quiver (absolutely simple tuples of
// matrices), memoized per context across total dimensions.
class LoopContext {
public:
    explicit LoopContext(int loops);

    int loops() const { return loops_; }

    /// A_d(q) for the m-loop quiver with trivial stability.
    const RationalFunction& counting_polynomial(int d);

    /// Coefficient at t^d of the inverse of the representation mass series,
    /// written back in the twisted algebra.
    RationalFunction inverse_mass_coefficient(int d) const;

private:
    int loops_;
    std::map<int, RationalFunction> memo_;

    RationalFunction isotype_sum(int d);
};

/// Convenience wrapper around a one-shot LoopContext.
RationalFunction loop_counting_polynomial(int d, int loops);

/// (1/d) sum_{r|d} mu(d/r) m^r: the number of aperiodic necklaces, equal to
/// the predicted value of A_d/(t-1) at t = 1 for d >= 2.
Rational euler_characteristic_prediction(int d, int loops);

}  // namespace qc
