#include "quivercount/combinatorics.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace qc {

Integer factorial(unsigned n) {
    Integer r(1);
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

int moebius_mu(unsigned n) {
    if (n == 0) throw std::domain_error("moebius_mu(0)");
    int prime_count = 0;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++prime_count;
    }
    if (n > 1) ++prime_count;
    return prime_count % 2 == 0 ? 1 : -1;
}

std::vector<unsigned> divisors_of(unsigned n) {
    std::vector<unsigned> low, high;
    for (unsigned d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        low.push_back(d);
        if (d != n / d) high.push_back(n / d);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

Polynomial gaussian_binomial(unsigned m, unsigned n) {
    if (n > m) throw std::domain_error("gaussian_binomial requires n <= m");
    // [m over i]_q = [m over i-1]_q * (q^{m-i+1}-1)/(q^i-1); each step divides exactly
    Polynomial result(1);
    for (unsigned i = 1; i <= n; ++i) {
        Polynomial top = Polynomial::monomial(static_cast<int>(m - i + 1)) - Polynomial(1);
        Polynomial bottom = Polynomial::monomial(static_cast<int>(i)) - Polynomial(1);
        result = exact_divide(result * top, bottom);
    }
    return result;
}

int Partition::weight() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::multiplicity(int part) const {
    return static_cast<int>(std::count(parts.begin(), parts.end(), part));
}

Integer Partition::ordering_count() const {
    Integer r = factorial(static_cast<unsigned>(parts.size()));
    std::map<int, int> mults;
    for (int p : parts) ++mults[p];
    for (const auto& [part, mult] : mults) r /= factorial(static_cast<unsigned>(mult));
    return r;
}

namespace {

void generate_partitions(int n, int max_part, Partition& current, std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (int first = std::min(n, max_part); first >= 1; --first) {
        current.parts.push_back(first);
        generate_partitions(n - first, first, current, out);
        current.parts.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::domain_error("partitions_of negative weight");
    std::vector<Partition> out;
    Partition scratch;
    generate_partitions(n, n, scratch, out);
    return out;
}

}  // namespace qc
