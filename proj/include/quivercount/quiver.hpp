#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "quivercount/rational.hpp"

namespace qc {

// Directed multigraph; loops and parallel arrows allowed. Vertex order is
// fixed at construction and drives every deterministic iteration.
class Quiver {
public:
    Quiver(std::vector<std::string> vertex_names,
           std::vector<std::pair<int, int>> arrow_list);

    /// One vertex "i" with the given number of loops.
    static Quiver loop(int loops);
    /// Two vertices i, j with the given number of parallel arrows i -> j.
    static Quiver kronecker(int arrows);
    /// Center i0 with arms i1..im, one arrow i_k -> i0 each.
    static Quiver subspace_star(int arms);

    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::vector<std::pair<int, int>>& arrows() const { return arrows_; }
    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int vertex_index(const std::string& name) const;  // throws on unknown name

    bool operator==(const Quiver&) const = default;

private:
    std::vector<std::string> vertices_;
    std::vector<std::pair<int, int>> arrows_;
};

// Nonnegative integer weight per vertex, in the quiver's vertex order.
class DimVector {
public:
    DimVector() = default;
    explicit DimVector(std::vector<int> entries);
    static DimVector zero(int n) { return DimVector(std::vector<int>(static_cast<size_t>(n), 0)); }

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int i) const { return entries_[static_cast<size_t>(i)]; }
    long long total() const;
    bool is_zero() const;

    DimVector operator+(const DimVector& rhs) const;
    /// Componentwise difference; throws if any entry would go negative.
    DimVector operator-(const DimVector& rhs) const;
    DimVector scaled(int k) const;
    /// d/r when r divides every entry, otherwise nullopt.
    std::optional<DimVector> divided_by(int r) const;

    bool operator==(const DimVector&) const = default;
    auto operator<=>(const DimVector&) const = default;  // lexicographic; map-key order

    std::string str() const;  // "(1,2)"

private:
    std::vector<int> entries_;
};

bool componentwise_leq(const DimVector& a, const DimVector& b);
/// a <= b componentwise and a != b.
bool strictly_below(const DimVector& a, const DimVector& b);
/// Total dimension ascending, ties lexicographic: the canonical lattice order.
bool lattice_less(const DimVector& a, const DimVector& b);

struct LatticeOrder {
    bool operator()(const DimVector& a, const DimVector& b) const { return lattice_less(a, b); }
};

// Integer weight per vertex defining slopes.
struct Stability {
    std::vector<long long> weights;

    static Stability zero(int n) { return Stability{std::vector<long long>(static_cast<size_t>(n), 0)}; }
    long long operator()(const DimVector& d) const;

    bool operator==(const Stability&) const = default;
};

using Slope = Rational;

/// theta(d)/dim(d) as a reduced fraction; throws on the zero vector.
Slope slope(const Stability& theta, const DimVector& d);
/// Cross-multiplied comparison theta(d)*dim(e) == theta(e)*dim(d).
bool same_slope(const Stability& theta, const DimVector& d, const DimVector& e);

// A slope class: the nonzero vectors of slope mu, plus 0 as the constant term.
struct SlopeClass {
    Stability theta;
    Slope mu;

    bool contains(const DimVector& d) const;
    bool operator==(const SlopeClass&) const = default;
};

/// All e with 0 <= e <= bound componentwise, restricted to the slope class
/// when given, in lattice order (total ascending, lexicographic ties).
std::vector<DimVector> enumerate_below(const DimVector& bound,
                                       const std::optional<SlopeClass>& restriction = std::nullopt);

/// Euler form <d,e> = sum_i d_i e_i - sum_{arrows i->j} d_i e_j.
long long euler_form(const Quiver& q, const DimVector& d, const DimVector& e);
/// sum over arrows i->j of d_i e_j; the dimension of R_d is arrow_form(q,d,d).
long long arrow_form(const Quiver& q, const DimVector& d, const DimVector& e);

}  // namespace qc
