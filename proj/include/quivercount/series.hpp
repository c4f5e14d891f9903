#pragma once

#include <map>
#include <optional>

#include "quivercount/quiver.hpp"
#include "quivercount/rational_function.hpp"

namespace qc {

// Truncated series indexed by dimension vectors with the q-twisted product
// t^d * t^e = q^{-<d,e>} t^{d+e}. Coefficients are stored for every index
// below the componentwise bound, restricted to a slope class when one is
// given; a missing index means coefficient zero. Immutable once built.
class TwistedSeries {
public:
    using CoefficientMap = std::map<DimVector, RationalFunction>;

    TwistedSeries(Quiver quiver, DimVector bound, std::optional<SlopeClass> restriction,
                  CoefficientMap coefficients);

    /// The multiplicative unit 1*t^0 on the given carrier.
    static TwistedSeries unit(Quiver quiver, DimVector bound,
                              std::optional<SlopeClass> restriction = std::nullopt);

    const Quiver& quiver() const { return quiver_; }
    const DimVector& bound() const { return bound_; }
    const std::optional<SlopeClass>& restriction() const { return restriction_; }

    /// Admissible indices in lattice order; the truncation's whole index set.
    const std::vector<DimVector>& index_set() const { return index_set_; }

    /// Stored coefficient or zero. Throws std::domain_error beyond the bound:
    /// past the truncation the value is unknown, not zero.
    const RationalFunction& coefficient(const DimVector& d) const;

    bool operator==(const TwistedSeries& rhs) const;

    /// Two-sided inverse within the truncation; requires constant term 1.
    TwistedSeries inverse() const;

private:
    Quiver quiver_;
    DimVector bound_;
    std::optional<SlopeClass> restriction_;
    CoefficientMap coefficients_;
    std::vector<DimVector> index_set_;
};

/// Coefficient of t^f is sum_{d+e=f} q^{-<d,e>} a_d b_e, truncated at the
/// common bound. Throws std::invalid_argument on mismatched carriers.
TwistedSeries twisted_mul(const TwistedSeries& a, const TwistedSeries& b);

}  // namespace qc
