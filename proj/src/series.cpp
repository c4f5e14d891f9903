#include "quivercount/series.hpp"

#include <stdexcept>

namespace qc {

namespace {
const RationalFunction kZero;
}

TwistedSeries::TwistedSeries(Quiver quiver, DimVector bound,
                             std::optional<SlopeClass> restriction, CoefficientMap coefficients)
    : quiver_(std::move(quiver)),
      bound_(std::move(bound)),
      restriction_(std::move(restriction)),
      coefficients_(std::move(coefficients)),
      index_set_(enumerate_below(bound_, restriction_)) {
    if (bound_.size() != quiver_.vertex_count())
        throw std::invalid_argument("series bound does not match quiver vertex set");
    for (auto it = coefficients_.begin(); it != coefficients_.end();) {
        const auto& [d, value] = *it;
        if (!componentwise_leq(d, bound_))
            throw std::invalid_argument("series coefficient index beyond bound");
        if (restriction_ && !restriction_->contains(d))
            throw std::invalid_argument("series coefficient index outside slope class");
        it = value.is_zero() ? coefficients_.erase(it) : std::next(it);
    }
}

TwistedSeries TwistedSeries::unit(Quiver quiver, DimVector bound,
                                  std::optional<SlopeClass> restriction) {
    CoefficientMap coeffs;
    coeffs.emplace(DimVector::zero(bound.size()), RationalFunction(1));
    return TwistedSeries(std::move(quiver), std::move(bound), std::move(restriction),
                         std::move(coeffs));
}

const RationalFunction& TwistedSeries::coefficient(const DimVector& d) const {
    if (!componentwise_leq(d, bound_))
        throw std::domain_error("coefficient index beyond series truncation");
    auto it = coefficients_.find(d);
    return it == coefficients_.end() ? kZero : it->second;
}

bool TwistedSeries::operator==(const TwistedSeries& rhs) const {
    return quiver_ == rhs.quiver_ && bound_ == rhs.bound_ && restriction_ == rhs.restriction_ &&
           coefficients_ == rhs.coefficients_;
}

TwistedSeries TwistedSeries::inverse() const {
    const DimVector origin = DimVector::zero(bound_.size());
    if (!coefficient(origin).is_one())
        throw std::domain_error("series inversion requires constant coefficient 1");

    // beta_d = -sum_{e < d} q^{<e-d,e>} alpha_{d-e} beta_e, built bottom-up in
    // lattice order so every beta_e is ready when needed.
    CoefficientMap beta;
    beta.emplace(origin, RationalFunction(1));
    for (const DimVector& d : index_set_) {
        if (d.is_zero()) continue;
        RationalFunction acc;
        for (const DimVector& e : index_set_) {
            if (!strictly_below(e, d)) continue;
            auto found = beta.find(e);
            if (found == beta.end() || found->second.is_zero()) continue;
            const RationalFunction& alpha = coefficient(d - e);
            if (alpha.is_zero()) continue;
            long long twist = euler_form(quiver_, e, e) - euler_form(quiver_, d, e);
            acc += RationalFunction::q_power(twist) * alpha * found->second;
        }
        if (!acc.is_zero()) beta.emplace(d, -acc);
    }
    return TwistedSeries(quiver_, bound_, restriction_, std::move(beta));
}

TwistedSeries twisted_mul(const TwistedSeries& a, const TwistedSeries& b) {
    if (!(a.quiver() == b.quiver()) || a.bound() != b.bound() ||
        a.restriction() != b.restriction())
        throw std::invalid_argument("twisted_mul on incompatible series carriers");

    TwistedSeries::CoefficientMap out;
    for (const DimVector& f : a.index_set()) {
        RationalFunction acc;
        for (const DimVector& d : a.index_set()) {
            if (!componentwise_leq(d, f)) continue;
            const RationalFunction& ad = a.coefficient(d);
            if (ad.is_zero()) continue;
            DimVector e = f - d;
            const RationalFunction& be = b.coefficient(e);
            if (be.is_zero()) continue;
            acc += RationalFunction::q_power(-euler_form(a.quiver(), d, e)) * ad * be;
        }
        if (!acc.is_zero()) out.emplace(f, std::move(acc));
    }
    return TwistedSeries(a.quiver(), a.bound(), a.restriction(), std::move(out));
}

}  // namespace qc
