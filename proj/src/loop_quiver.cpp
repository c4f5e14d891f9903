#include "quivercount/loop_quiver.hpp"

#include <functional>
#include <stdexcept>

#include "quivercount/combinatorics.hpp"

namespace qc {

namespace {

long long choose2(long long n) { return n * (n - 1) / 2; }

/// prod_{j=1}^{d} (q^j - 1).
Polynomial q_factorial_product(int d) {
    Polynomial result(1);
    for (int j = 1; j <= d; ++j) result *= Polynomial::monomial(j) - Polynomial(1);
    return result;
}

}  // namespace

RationalFunction untwist_factor(int loops, int d) {
    return RationalFunction::q_power((1 - static_cast<long long>(loops)) * choose2(d));
}

LoopSeries partition_inverse(const LoopSeries& a) {
    if (a.coeffs.empty() || !a.coeffs[0].is_one())
        throw std::domain_error("partition_inverse requires constant coefficient 1");
    LoopSeries out{a.loops, std::vector<RationalFunction>(a.coeffs.size())};
    out.coeffs[0] = RationalFunction(1);
    for (int d = 1; d <= a.bound(); ++d) {
        RationalFunction acc;
        for (const Partition& lambda : partitions_of(d)) {
            RationalFunction term(Rational(lambda.ordering_count()));
            if (lambda.length() % 2 != 0) term = -term;
            for (int part : lambda.parts) term *= a.coeffs[static_cast<size_t>(part)];
            acc += term;
        }
        out.coeffs[static_cast<size_t>(d)] = acc;
    }
    return out;
}

LoopContext::LoopContext(int loops) : loops_(loops) {
    if (loops < 0) throw std::invalid_argument("negative loop count");
}

RationalFunction LoopContext::inverse_mass_coefficient(int d) const {
    // In the untwisted picture the mass series coefficient at dimension k is
    // q^{m*binom(k+1,2)} / prod_{j<=k}(q^j - 1); invert there and restore the
    // twist with the untwist factor's inverse.
    RationalFunction acc;
    for (const Partition& lambda : partitions_of(d)) {
        RationalFunction term(Rational(lambda.ordering_count()));
        if (lambda.length() % 2 != 0) term = -term;
        for (int part : lambda.parts) {
            term *= RationalFunction(
                Polynomial::monomial(static_cast<int>(static_cast<long long>(loops_) *
                                                      choose2(part + 1))),
                q_factorial_product(part));
        }
        acc += term;
    }
    return RationalFunction::q_power((static_cast<long long>(loops_) - 1) * choose2(d)) * acc;
}

RationalFunction LoopContext::isotype_sum(int d) {
    // Triples (i, j, k): stable dimension i*j, endomorphism degree j,
    // multiplicity k; a pattern contributes i*j*k per unit of its count.
    struct Key {
        int i, j, k;
    };
    std::vector<Key> keys;
    for (int i = 1; i <= d; ++i)
        for (int j = 1; i * j <= d; ++j)
            for (int k = 1; i * j * k <= d; ++k) keys.push_back({i, j, k});

    RationalFunction total;
    std::vector<int> counts(keys.size(), 0);
    std::function<void(size_t, int)> descend = [&](size_t idx, int rest) {
        if (idx == keys.size()) {
            if (rest != 0) return;
            // skip the single absolutely stable pattern (d, 1, 1) -> 1
            bool single = true;
            for (size_t t = 0; t < keys.size(); ++t) {
                bool is_delta_key = keys[t].i == d && keys[t].j == 1 && keys[t].k == 1;
                if (counts[t] != (is_delta_key ? 1 : 0)) single = false;
            }
            if (single) return;

            RationalFunction term(1);
            // choices of distinct stable summands, grouped by (i, j)
            for (int i = 1; i <= d; ++i)
                for (int j = 1; i * j <= d; ++j) {
                    int group_total = 0;
                    Integer orderings(1);
                    for (size_t t = 0; t < keys.size(); ++t) {
                        if (keys[t].i != i || keys[t].j != j || counts[t] == 0) continue;
                        group_total += counts[t];
                        orderings *= factorial(static_cast<unsigned>(counts[t]));
                    }
                    if (group_total == 0) continue;
                    RationalFunction s;
                    for (unsigned r : divisors_of(static_cast<unsigned>(j))) {
                        int mu = moebius_mu(static_cast<unsigned>(j) / r);
                        if (mu == 0) continue;
                        s += Rational(mu) * memo_.at(i).substitute_power(static_cast<int>(r));
                    }
                    s /= RationalFunction(Rational(j));
                    term *= binomial(s, static_cast<unsigned>(group_total));
                    term *= Rational(factorial(static_cast<unsigned>(group_total))) /
                            Rational(orderings);
                }
            // automorphism mass factors prod_{l=1}^k (1 - q^{lj})^{-count}
            for (size_t t = 0; t < keys.size(); ++t) {
                if (counts[t] == 0) continue;
                for (int l = 1; l <= keys[t].k; ++l) {
                    RationalFunction factor =
                        RationalFunction(1) -
                        RationalFunction::q_power(static_cast<long>(l) * keys[t].j);
                    term /= pow(factor, counts[t]);
                }
            }
            total += term;
            return;
        }
        int weight = keys[idx].i * keys[idx].j * keys[idx].k;
        for (int count = 0; count * weight <= rest; ++count) {
            counts[idx] = count;
            descend(idx + 1, rest - count * weight);
        }
        counts[idx] = 0;
    };
    descend(0, d);
    return total;
}

const RationalFunction& LoopContext::counting_polynomial(int d) {
    if (d < 1) throw std::domain_error("counting polynomial needs dimension >= 1");
    for (int k = 1; k <= d; ++k) {
        if (memo_.count(k)) continue;
        RationalFunction one_minus_q =
            RationalFunction(1) - RationalFunction(Polynomial::variable());
        memo_.emplace(k, one_minus_q * (inverse_mass_coefficient(k) - isotype_sum(k)));
    }
    return memo_.at(d);
}

RationalFunction loop_counting_polynomial(int d, int loops) {
    LoopContext ctx(loops);
    return ctx.counting_polynomial(d);
}

Rational euler_characteristic_prediction(int d, int loops) {
    if (d < 1) throw std::domain_error("prediction needs dimension >= 1");
    Integer acc(0);
    Integer m(loops);
    for (unsigned r : divisors_of(static_cast<unsigned>(d))) {
        int mu = moebius_mu(static_cast<unsigned>(d) / r);
        if (mu == 0) continue;
        Integer power;
        mpz_pow_ui(power.get_mpz_t(), m.get_mpz_t(), r);
        acc += mu * power;
    }
    return make_rational(acc, Integer(d));
}

}  // namespace qc
