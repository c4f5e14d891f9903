#include "quivercount/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace qc {

Polynomial::Polynomial(const Rational& constant) {
    if (constant != 0) coeffs_.push_back(constant);
}

Polynomial::Polynomial(long constant) : Polynomial(Rational(constant)) {}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Polynomial Polynomial::variable() { return monomial(1); }

Polynomial Polynomial::monomial(int degree, const Rational& coeff) {
    if (degree < 0) throw std::domain_error("monomial with negative degree");
    Polynomial p;
    if (coeff != 0) {
        p.coeffs_.assign(static_cast<size_t>(degree) + 1, Rational(0));
        p.coeffs_.back() = coeff;
    }
    return p;
}

bool Polynomial::is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

const Rational& Polynomial::leading() const {
    if (is_zero()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

Rational Polynomial::coeff(int i) const {
    if (i < 0 || static_cast<size_t>(i) >= coeffs_.size()) return Rational(0);
    return coeffs_[static_cast<size_t>(i)];
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
    for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
    *this = *this * rhs;
    return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

Polynomial Polynomial::substitute_power(int s) const {
    if (s < 1) throw std::domain_error("substitute_power requires s >= 1");
    if (s == 1 || is_zero()) return *this;
    std::vector<Rational> out(static_cast<size_t>(degree()) * s + 1, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[i * s] = coeffs_[i];
    return Polynomial(std::move(out));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

bool Polynomial::has_integer_coefficients() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return is_integer(c); });
}

Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }

Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.coeffs().size() + b.coeffs().size() - 1, Rational(0));
    for (size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (size_t j = 0; j < b.coeffs().size(); ++j) out[i + j] += a.coeffs()[i] * b.coeffs()[j];
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& s, Polynomial p) { return p *= s; }

void divmod(const Polynomial& a, const Polynomial& b, Polynomial& quo, Polynomial& rem) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    int db = b.degree();
    int dq = a.degree() - db;
    if (dq < 0) {
        quo = Polynomial();
        rem = a;
        return;
    }
    std::vector<Rational> q(static_cast<size_t>(dq) + 1, Rational(0));
    const Rational& lead = b.leading();
    for (int k = dq; k >= 0; --k) {
        Rational factor = r[static_cast<size_t>(k + db)] / lead;
        if (factor == 0) continue;
        q[static_cast<size_t>(k)] = factor;
        for (int i = 0; i <= db; ++i) r[static_cast<size_t>(k + i)] -= factor * b.coeff(i);
    }
    quo = Polynomial(std::move(q));
    rem = Polynomial(std::move(r));
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
    Polynomial q, r;
    divmod(a, b, q, r);
    if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
    return q;
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial q, r;
        divmod(a, b, q, r);
        // monic remainders keep coefficient growth in check
        if (!r.is_zero()) r *= Rational(1) / r.leading();
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.is_zero()) a *= Rational(1) / a.leading();
    return a;
}

Polynomial pow(const Polynomial& base, unsigned exp) {
    Polynomial result(1);
    Polynomial b = base;
    while (exp > 0) {
        if (exp & 1u) result *= b;
        exp >>= 1u;
        if (exp > 0) b *= b;
    }
    return result;
}

std::string Polynomial::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeff(k);
        if (c == 0) continue;
        bool negative = c < 0;
        Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) os << '-';
            first = false;
        } else {
            os << (negative ? " - " : " + ");
        }
        if (k == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << '*';
            os << var;
            if (k > 1) os << '^' << k;
        }
    }
    return os.str();
}

namespace {

// One signed term of the printed form: [coeff][*]var[^exp].
void parse_term(const std::string& term, const std::string& var, bool negative,
                std::vector<std::pair<int, Rational>>& out) {
    if (term.empty()) throw std::invalid_argument("empty term in polynomial text");
    auto rational_of = [](const std::string& text) {
        Rational r(text);
        if (r.get_den() == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
        return r;
    };
    size_t vpos = term.find(var);
    Rational coeff(1);
    int deg = 0;
    if (vpos == std::string::npos) {
        coeff = rational_of(term);
    } else {
        std::string head = term.substr(0, vpos);
        if (!head.empty()) {
            if (head.back() == '*') head.pop_back();
            if (!head.empty()) coeff = rational_of(head);
        }
        std::string tail = term.substr(vpos + var.size());
        if (!tail.empty()) {
            if (tail[0] != '^') throw std::invalid_argument("malformed exponent in '" + term + "'");
            deg = std::stoi(tail.substr(1));
        } else {
            deg = 1;
        }
    }
    coeff.canonicalize();
    out.emplace_back(deg, negative ? Rational(-coeff) : coeff);
}

}  // namespace

Polynomial parse_polynomial(const std::string& text, const std::string& var) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("empty polynomial text");

    std::vector<std::pair<int, Rational>> terms;
    size_t pos = 0;
    bool negative = false;
    if (s[0] == '-') {
        negative = true;
        pos = 1;
    } else if (s[0] == '+') {
        pos = 1;
    }
    size_t start = pos;
    try {
        for (; pos <= s.size(); ++pos) {
            bool at_end = pos == s.size();
            // '/' introduces a denominator, never a new term
            if (at_end || s[pos] == '+' || s[pos] == '-') {
                parse_term(s.substr(start, pos - start), var, negative, terms);
                if (at_end) break;
                negative = s[pos] == '-';
                start = pos + 1;
            }
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception& e) {
        throw std::invalid_argument(std::string("malformed polynomial text: ") + e.what());
    }

    int deg = 0;
    for (const auto& [d, c] : terms) deg = std::max(deg, d);
    std::vector<Rational> coeffs(static_cast<size_t>(deg) + 1, Rational(0));
    for (const auto& [d, c] : terms) coeffs[static_cast<size_t>(d)] += c;
    return Polynomial(std::move(coeffs));
}

}  // namespace qc
