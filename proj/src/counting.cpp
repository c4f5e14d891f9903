#include "quivercount/counting.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "quivercount/combinatorics.hpp"
#include "quivercount/series.hpp"

namespace qc {

Polynomial general_linear_order(int n) {
    if (n < 0) throw std::domain_error("general_linear_order of negative rank");
    Polynomial result(1);
    for (int i = 0; i < n; ++i)
        result *= Polynomial::monomial(n) - Polynomial::monomial(i);
    return result;
}

RationalFunction representation_mass(const Quiver& q, const DimVector& d) {
    long long space_dim = arrow_form(q, d, d);
    Polynomial group(1);
    for (int i = 0; i < d.size(); ++i) group *= general_linear_order(d[i]);
    return RationalFunction(Polynomial::monomial(static_cast<int>(space_dim)), group);
}

bool TypeKeyOrder::operator()(const TypeKey& a, const TypeKey& b) const {
    if (a.d != b.d) return lattice_less(a.d, b.d);
    if (a.end_degree != b.end_degree) return a.end_degree < b.end_degree;
    return a.multiplicity < b.multiplicity;
}

void TypeFunction::add(TypeKey key, int count) {
    if (count <= 0) throw std::invalid_argument("type function multiplicities are positive");
    if (key.d.is_zero()) throw std::invalid_argument("type function key with zero dimension");
    support_[std::move(key)] += count;
}

DimVector TypeFunction::dimension() const {
    DimVector total = DimVector::zero(n_vertices_);
    for (const auto& [key, count] : support_)
        total = total + key.d.scaled(key.multiplicity * count);
    return total;
}

bool TypeFunction::is_single_stable(const DimVector& d0) const {
    if (support_.size() != 1) return false;
    const auto& [key, count] = *support_.begin();
    return count == 1 && key.end_degree == 1 && key.multiplicity == 1 && key.d == d0;
}

CertificationError::CertificationError(const RationalFunction& offender)
    : std::domain_error("not an integer polynomial: " + offender.str()), offender_(offender) {}

Polynomial certify_integer_polynomial(const RationalFunction& f) {
    Polynomial quo, rem;
    divmod(f.num(), f.den(), quo, rem);
    if (!rem.is_zero() || !quo.has_integer_coefficients()) throw CertificationError(f);
    return quo;
}

Integer euler_characteristic(const Polynomial& p) {
    Rational value = p.eval(Rational(1));
    if (!is_integer(value)) throw std::domain_error("non-integer value at 1");
    return value.get_num();
}

CountingContext::CountingContext(Quiver quiver, Stability theta, DimVector target)
    : quiver_(std::move(quiver)), theta_(std::move(theta)), target_(std::move(target)) {
    if (target_.size() != quiver_.vertex_count() ||
        static_cast<int>(theta_.weights.size()) != quiver_.vertex_count())
        throw std::invalid_argument("context carrier size mismatch");
    if (target_.is_zero())
        throw std::domain_error("target dimension vector must be nonzero");
    class_ = SlopeClass{theta_, slope(theta_, target_)};
}

void CountingContext::require_in_class(const DimVector& d) const {
    if (!componentwise_leq(d, target_))
        throw std::invalid_argument("dimension vector " + d.str() + " not below target " +
                                    target_.str());
    if (!class_.contains(d))
        throw std::domain_error("dimension vector " + d.str() + " outside the slope class");
}

const RationalFunction& CountingContext::mass(const DimVector& d) {
    auto it = mass_memo_.find(d);
    if (it == mass_memo_.end())
        it = mass_memo_.emplace(d, representation_mass(quiver_, d)).first;
    return it->second;
}

const RationalFunction& CountingContext::semistable_mass(const DimVector& e) {
    require_in_class(e);
    if (auto it = ss_memo_.find(e); it != ss_memo_.end()) return it->second;
    if (e.is_zero()) return ss_memo_.emplace(e, RationalFunction(1)).first->second;

    // Harder-Narasimhan alternating sum, folded over first parts: from a
    // partial sum p the completions are single final parts g = e - p plus
    // continuations through p + g of slope above mu(e), each continuation
    // entering with a sign flip. The twist picked up by appending g after p
    // is q^{-<g,p>}.
    const Slope mu_e = slope(theta_, e);
    std::map<DimVector, RationalFunction> partial;
    std::function<const RationalFunction&(const DimVector&)> completions =
        [&](const DimVector& sofar) -> const RationalFunction& {
        if (auto it = partial.find(sofar); it != partial.end()) return it->second;
        RationalFunction acc;
        for (const DimVector& g : enumerate_below(e - sofar)) {
            if (g.is_zero()) continue;
            DimVector next = sofar + g;
            RationalFunction term =
                RationalFunction::q_power(-euler_form(quiver_, g, sofar)) * mass(g);
            if (next == e)
                acc += term;
            else if (slope(theta_, next) > mu_e)
                acc -= term * completions(next);
        }
        return partial.emplace(sofar, std::move(acc)).first->second;
    };
    RationalFunction result = completions(DimVector::zero(e.size()));
    return ss_memo_.emplace(e, std::move(result)).first->second;
}

const RationalFunction& CountingContext::inverse_mass_coefficient(const DimVector& d) {
    require_in_class(d);
    if (!beta_filled_) {
        TwistedSeries::CoefficientMap coeffs;
        for (const DimVector& e : enumerate_below(target_, class_))
            coeffs.emplace(e, semistable_mass(e));
        TwistedSeries mass_series(quiver_, target_, class_, std::move(coeffs));
        TwistedSeries inv = mass_series.inverse();
        for (const DimVector& e : inv.index_set()) beta_memo_[e] = inv.coefficient(e);
        beta_filled_ = true;
    }
    return beta_memo_.at(d);
}

const RationalFunction& CountingContext::stable_value(const DimVector& e) {
    if (filling_ && !strictly_below(e, *filling_))
        throw std::logic_error("recursion for " + filling_->str() +
                               " consulted non-smaller entry " + e.str());
    auto it = stable_memo_.find(e);
    if (it == stable_memo_.end())
        throw std::logic_error("stable count for " + e.str() + " read before computed");
    return it->second;
}

RationalFunction CountingContext::stable_count_by_end_degree(const DimVector& d, int r) {
    if (r < 1) throw std::domain_error("endomorphism degree must be positive");
    auto quotient = d.divided_by(r);
    if (!quotient) return RationalFunction();
    RationalFunction acc;
    for (unsigned s : divisors_of(static_cast<unsigned>(r))) {
        int mu = moebius_mu(static_cast<unsigned>(r) / s);
        if (mu == 0) continue;
        acc += Rational(mu) * stable_value(*quotient).substitute_power(static_cast<int>(s));
    }
    return acc / RationalFunction(Rational(r));
}

std::vector<TypeFunction> CountingContext::type_functions(const DimVector& d0) const {
    require_in_class(d0);
    // Admissible keys: d in the slope class below d0, r dividing d
    // componentwise, m with m*d still below d0.
    std::vector<TypeKey> keys;
    for (const DimVector& d : enumerate_below(d0, class_)) {
        if (d.is_zero()) continue;
        int g = 0;
        for (int i = 0; i < d.size(); ++i) g = std::gcd(g, d[i]);
        for (unsigned r : divisors_of(static_cast<unsigned>(g))) {
            for (int m = 1; componentwise_leq(d.scaled(m), d0); ++m)
                keys.push_back(TypeKey{d, static_cast<int>(r), m});
        }
    }
    std::sort(keys.begin(), keys.end(), [](const TypeKey& a, const TypeKey& b) {
        return TypeKeyOrder{}(a, b);
    });

    std::vector<TypeFunction> out;
    std::vector<int> counts(keys.size(), 0);
    std::function<void(size_t, const DimVector&)> descend = [&](size_t idx, const DimVector& rest) {
        if (idx == keys.size()) {
            if (!rest.is_zero()) return;
            TypeFunction xi(quiver_.vertex_count());
            for (size_t k = 0; k < keys.size(); ++k)
                if (counts[k] > 0) xi.add(keys[k], counts[k]);
            out.push_back(std::move(xi));
            return;
        }
        const DimVector weight = keys[idx].d.scaled(keys[idx].multiplicity);
        DimVector remaining = rest;
        for (int count = 0;; ++count) {
            counts[idx] = count;
            descend(idx + 1, remaining);
            if (!componentwise_leq(weight, remaining)) break;
            remaining = remaining - weight;
        }
        counts[idx] = 0;
    };
    descend(0, d0);
    return out;
}

RationalFunction CountingContext::polystable_term(const TypeFunction& xi) {
    RationalFunction result(1);

    // Group the support by (d, r): choose the distinct stable summands.
    std::map<std::pair<DimVector, int>, int> totals;
    std::map<std::pair<DimVector, int>, Integer> orderings;
    for (const auto& [key, count] : xi.support()) {
        auto dr = std::make_pair(key.d, key.end_degree);
        totals[dr] += count;
        auto it = orderings.emplace(dr, Integer(1)).first;
        it->second *= factorial(static_cast<unsigned>(count));
    }
    for (const auto& [dr, total] : totals) {
        RationalFunction s = stable_count_by_end_degree(dr.first, dr.second);
        result *= binomial(s, static_cast<unsigned>(total));
        result *= Rational(factorial(static_cast<unsigned>(total))) / Rational(orderings.at(dr));
    }

    // Automorphism mass of each isotypical block: prod_{i=1}^m (1-q^{ri})^{-1}
    // per summand counted with its multiplicity in xi.
    for (const auto& [key, count] : xi.support()) {
        for (int i = 1; i <= key.multiplicity; ++i) {
            RationalFunction factor =
                RationalFunction(1) - RationalFunction::q_power(static_cast<long>(key.end_degree) * i);
            result /= pow(factor, count);
        }
    }
    return result;
}

const RationalFunction& CountingContext::absolutely_stable_count(const DimVector& d) {
    if (d.is_zero()) throw std::domain_error("stable count of the zero dimension vector");
    require_in_class(d);
    if (auto it = stable_memo_.find(d); it != stable_memo_.end()) return it->second;

    const RationalFunction one_minus_q =
        RationalFunction(1) - RationalFunction(Polynomial::variable());
    for (const DimVector& e : enumerate_below(d, class_)) {
        if (e.is_zero() || stable_memo_.count(e)) continue;
        filling_ = e;
        RationalFunction beta = inverse_mass_coefficient(e);
        RationalFunction rest;
        for (const TypeFunction& xi : type_functions(e)) {
            if (xi.is_single_stable(e)) continue;
            rest += polystable_term(xi);
        }
        filling_.reset();
        stable_memo_.emplace(e, one_minus_q * (beta - rest));
    }
    return stable_memo_.at(d);
}

bool CountingContext::check_inversion_identity(const DimVector& d0) {
    require_in_class(d0);
    RationalFunction sum;
    for (const TypeFunction& xi : type_functions(d0)) sum += polystable_term(xi);
    return sum == inverse_mass_coefficient(d0);
}

}  // namespace qc
