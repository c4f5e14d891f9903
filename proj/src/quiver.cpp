#include "quivercount/quiver.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qc {

Quiver::Quiver(std::vector<std::string> vertex_names, std::vector<std::pair<int, int>> arrow_list)
    : vertices_(std::move(vertex_names)), arrows_(std::move(arrow_list)) {
    if (vertices_.empty()) throw std::invalid_argument("quiver needs at least one vertex");
    std::set<std::string> seen(vertices_.begin(), vertices_.end());
    if (seen.size() != vertices_.size()) throw std::invalid_argument("duplicate vertex name");
    for (const auto& [s, t] : arrows_) {
        if (s < 0 || s >= vertex_count() || t < 0 || t >= vertex_count())
            throw std::invalid_argument("arrow endpoint outside vertex set");
    }
}

Quiver Quiver::loop(int loops) {
    if (loops < 0) throw std::invalid_argument("negative loop count");
    std::vector<std::pair<int, int>> arrows(static_cast<size_t>(loops), {0, 0});
    return Quiver({"i"}, std::move(arrows));
}

Quiver Quiver::kronecker(int arrows) {
    if (arrows < 0) throw std::invalid_argument("negative arrow count");
    std::vector<std::pair<int, int>> list(static_cast<size_t>(arrows), {0, 1});
    return Quiver({"i", "j"}, std::move(list));
}

Quiver Quiver::subspace_star(int arms) {
    if (arms < 1) throw std::invalid_argument("star quiver needs at least one arm");
    std::vector<std::string> names = {"i0"};
    std::vector<std::pair<int, int>> list;
    for (int k = 1; k <= arms; ++k) {
        names.push_back("i" + std::to_string(k));
        list.emplace_back(k, 0);
    }
    return Quiver(std::move(names), std::move(list));
}

int Quiver::vertex_index(const std::string& name) const {
    auto it = std::find(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end()) throw std::invalid_argument("unknown vertex '" + name + "'");
    return static_cast<int>(it - vertices_.begin());
}

DimVector::DimVector(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
        if (e < 0) throw std::invalid_argument("negative dimension entry");
}

long long DimVector::total() const {
    return std::accumulate(entries_.begin(), entries_.end(), 0ll);
}

bool DimVector::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(), [](int e) { return e == 0; });
}

DimVector DimVector::operator+(const DimVector& rhs) const {
    if (size() != rhs.size()) throw std::invalid_argument("dimension vector size mismatch");
    std::vector<int> out(entries_);
    for (int i = 0; i < size(); ++i) out[static_cast<size_t>(i)] += rhs[i];
    return DimVector(std::move(out));
}

DimVector DimVector::operator-(const DimVector& rhs) const {
    if (size() != rhs.size()) throw std::invalid_argument("dimension vector size mismatch");
    std::vector<int> out(entries_);
    for (int i = 0; i < size(); ++i) {
        out[static_cast<size_t>(i)] -= rhs[i];
        if (out[static_cast<size_t>(i)] < 0)
            throw std::invalid_argument("dimension vector difference has negative entry");
    }
    return DimVector(std::move(out));
}

DimVector DimVector::scaled(int k) const {
    if (k < 0) throw std::invalid_argument("negative scale");
    std::vector<int> out(entries_);
    for (auto& e : out) e *= k;
    return DimVector(std::move(out));
}

std::optional<DimVector> DimVector::divided_by(int r) const {
    if (r < 1) throw std::invalid_argument("divided_by requires r >= 1");
    std::vector<int> out(entries_);
    for (auto& e : out) {
        if (e % r != 0) return std::nullopt;
        e /= r;
    }
    return DimVector(std::move(out));
}

std::string DimVector::str() const {
    std::ostringstream os;
    os << '(';
    for (int i = 0; i < size(); ++i) {
        if (i > 0) os << ',';
        os << (*this)[i];
    }
    os << ')';
    return os.str();
}

bool componentwise_leq(const DimVector& a, const DimVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dimension vector size mismatch");
    for (int i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

bool strictly_below(const DimVector& a, const DimVector& b) {
    return a != b && componentwise_leq(a, b);
}

bool lattice_less(const DimVector& a, const DimVector& b) {
    if (a.total() != b.total()) return a.total() < b.total();
    return a < b;
}

long long Stability::operator()(const DimVector& d) const {
    if (static_cast<size_t>(d.size()) != weights.size())
        throw std::invalid_argument("stability/dimension size mismatch");
    long long acc = 0;
    for (int i = 0; i < d.size(); ++i) acc += weights[static_cast<size_t>(i)] * d[i];
    return acc;
}

Slope slope(const Stability& theta, const DimVector& d) {
    if (d.is_zero()) throw std::domain_error("slope of the zero dimension vector");
    return make_rational(Integer(theta(d)), Integer(d.total()));
}

bool same_slope(const Stability& theta, const DimVector& d, const DimVector& e) {
    if (d.is_zero() || e.is_zero()) throw std::domain_error("slope of the zero dimension vector");
    return Integer(theta(d)) * Integer(e.total()) == Integer(theta(e)) * Integer(d.total());
}

bool SlopeClass::contains(const DimVector& d) const {
    return d.is_zero() || slope(theta, d) == mu;
}

std::vector<DimVector> enumerate_below(const DimVector& bound,
                                       const std::optional<SlopeClass>& restriction) {
    std::vector<DimVector> out;
    std::vector<int> current(static_cast<size_t>(bound.size()), 0);
    while (true) {
        DimVector d(current);
        if (!restriction || restriction->contains(d)) out.push_back(d);
        int i = bound.size() - 1;
        while (i >= 0 && current[static_cast<size_t>(i)] == bound[i]) {
            current[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++current[static_cast<size_t>(i)];
    }
    std::sort(out.begin(), out.end(), lattice_less);
    return out;
}

long long arrow_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    if (d.size() != q.vertex_count() || e.size() != q.vertex_count())
        throw std::invalid_argument("dimension vector does not match quiver vertex set");
    long long acc = 0;
    for (const auto& [s, t] : q.arrows()) acc += static_cast<long long>(d[s]) * e[t];
    return acc;
}

long long euler_form(const Quiver& q, const DimVector& d, const DimVector& e) {
    long long dot = 0;
    if (d.size() != q.vertex_count() || e.size() != q.vertex_count())
        throw std::invalid_argument("dimension vector does not match quiver vertex set");
    for (int i = 0; i < d.size(); ++i) dot += static_cast<long long>(d[i]) * e[i];
    return dot - arrow_form(q, d, e);
}

}  // namespace qc
