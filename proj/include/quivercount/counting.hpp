#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "quivercount/quiver.hpp"
#include "quivercount/rational_function.hpp"

namespace qc {

/// |GL_n(F_q)| = prod_{i=0}^{n-1} (q^n - q^i) as a polynomial; 1 for n = 0.
Polynomial general_linear_order(int n);

/// |R_d(F_q)| / |G_d(F_q)| = q^{arrow_form(d,d)} / prod_i |GL_{d_i}|: the
/// 1/|Aut|-weighted total mass of all d-dimensional representations.
RationalFunction representation_mass(const Quiver& q, const DimVector& d);

// Finitely supported multiplicity pattern of a polystable representation:
// (d, r, m) -> how many distinct stable summands of dimension d with
// endomorphism field of degree r occur with multiplicity m.
struct TypeKey {
    DimVector d;
    int end_degree;    // r
    int multiplicity;  // m

    bool operator==(const TypeKey&) const = default;
};

struct TypeKeyOrder {
    bool operator()(const TypeKey& a, const TypeKey& b) const;
};

class TypeFunction {
public:
    explicit TypeFunction(int n_vertices) : n_vertices_(n_vertices) {}

    void add(TypeKey key, int count);
    const std::map<TypeKey, int, TypeKeyOrder>& support() const { return support_; }

    /// sum over support of m * count * d.
    DimVector dimension() const;
    /// True when this is the single-key pattern (d0, 1, 1) -> 1.
    bool is_single_stable(const DimVector& d0) const;

    bool operator==(const TypeFunction& rhs) const { return support_ == rhs.support_; }

private:
    int n_vertices_;
    std::map<TypeKey, int, TypeKeyOrder> support_;
};

// Raised when a counting function fails to reduce to an integer polynomial.
class CertificationError : public std::domain_error {
public:
    explicit CertificationError(const RationalFunction& offender);
    const RationalFunction& offender() const { return offender_; }

private:
    RationalFunction offender_;
};

/// The exact integer polynomial equal to f, or CertificationError when the
/// reduced fraction is not a polynomial with integer coefficients.
Polynomial certify_integer_polynomial(const RationalFunction& f);

/// Evaluation at 1; for certified counting polynomials this is the Euler
/// characteristic of the moduli space.
Integer euler_characteristic(const Polynomial& p);

// One quiver, one stability, one target dimension vector; memoizes every
// counting function on the slope class below the target. Fill runs in a
// single thread; a finished context is safe for concurrent reads.
class CountingContext {
public:
    CountingContext(Quiver quiver, Stability theta, DimVector target);

    const Quiver& quiver() const { return quiver_; }
    const Stability& stability() const { return theta_; }
    const DimVector& target() const { return target_; }
    const Slope& mu() const { return class_.mu; }
    const SlopeClass& slope_class() const { return class_; }

    /// |R_e^{ss}|/|G_e|: alternating sum over tuples (d^1,...,d^s) of nonzero
    /// vectors with sum e whose proper partial sums all have slope > mu(e).
    const RationalFunction& semistable_mass(const DimVector& e);

    /// Coefficient at d of the inverse of the semistable mass series in the
    /// slope-class subalgebra.
    const RationalFunction& inverse_mass_coefficient(const DimVector& d);

    /// a_d(q): the number of absolutely stable representations of dimension d
    /// over F_q, as a rational function of q. Requires d in the slope class.
    const RationalFunction& absolutely_stable_count(const DimVector& d);

    /// Stable representations of dimension d whose endomorphism field has
    /// degree r: zero unless r | d, else the Moebius combination
    /// (1/r) sum_{s|r} mu(r/s) a_{d/r}(q^s).
    RationalFunction stable_count_by_end_degree(const DimVector& d, int r);

    /// All type functions of the given total dimension in a fixed
    /// deterministic order; includes the single-stable pattern (d0,1,1).
    std::vector<TypeFunction> type_functions(const DimVector& d0) const;

    /// The series term contributed by polystable representations of type xi.
    RationalFunction polystable_term(const TypeFunction& xi);

    /// Full-circle check: the inverse series coefficient at d0 equals the sum
    /// of polystable terms over all type functions of dimension d0. Valid
    /// after absolutely_stable_count(d0).
    bool check_inversion_identity(const DimVector& d0);

private:
    Quiver quiver_;
    Stability theta_;
    DimVector target_;
    SlopeClass class_;

    std::map<DimVector, RationalFunction> mass_memo_;
    std::map<DimVector, RationalFunction> ss_memo_;
    std::map<DimVector, RationalFunction> beta_memo_;
    std::map<DimVector, RationalFunction> stable_memo_;
    bool beta_filled_ = false;
    std::optional<DimVector> filling_;

    const RationalFunction& mass(const DimVector& d);
    /// Instrumented read: while a_d is being filled only entries strictly
    /// below d may be consulted.
    const RationalFunction& stable_value(const DimVector& e);
    void require_in_class(const DimVector& d) const;
};

}  // namespace qc
