#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "quivercount/quiver.hpp"

namespace qc {

// Raised when a brute-force job would exceed the configured point budget.
class BudgetExceeded : public std::runtime_error {
public:
    BudgetExceeded(const std::string& what_kind, std::uint64_t required, std::uint64_t budget);
    std::uint64_t required() const { return required_; }
    std::uint64_t budget() const { return budget_; }

private:
    std::uint64_t required_;
    std::uint64_t budget_;
};

constexpr std::uint64_t kDefaultPointBudget = std::uint64_t(1) << 24;

// Dense matrix over the prime field F_p, row-major uint8 entries.
class FpMatrix {
public:
    FpMatrix(int rows, int cols, int p);
    static FpMatrix identity(int n, int p);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int modulus() const { return p_; }
    std::uint8_t at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }
    void set(int r, int c, std::uint8_t v) { a_[static_cast<size_t>(r) * cols_ + c] = v; }

    FpMatrix operator*(const FpMatrix& rhs) const;
    /// Gauss-Jordan inverse; empty for singular matrices.
    std::optional<FpMatrix> inverse() const;
    /// In-place reduced row echelon form; returns the rank.
    int row_reduce();

    bool operator==(const FpMatrix&) const = default;

private:
    int rows_, cols_, p_;
    std::vector<std::uint8_t> a_;
};

/// Row-space bases of all subspaces of F_p^dim as RREF matrices, rank
/// ascending; includes the zero subspace (0 rows) and the full space.
std::vector<FpMatrix> all_subspaces(int dim, int p);

/// Every invertible n x n matrix over F_p, in lexicographic entry order.
std::vector<FpMatrix> general_linear_group(int n, int p, std::uint64_t budget = kDefaultPointBudget);

// One matrix per arrow, shaped d_target x d_source.
struct FiniteRepresentation {
    DimVector dim;
    int modulus;
    std::vector<FpMatrix> matrices;
};

// The affine space R_d(F_p), addressed by codes 0..size-1 in lexicographic
// matrix-entry order (entry order: arrows in quiver order, rows, columns).
class RepresentationSpace {
public:
    RepresentationSpace(Quiver quiver, DimVector dim, int p,
                        std::uint64_t budget = kDefaultPointBudget);

    const Quiver& quiver() const { return quiver_; }
    const DimVector& dim() const { return dim_; }
    int modulus() const { return p_; }
    std::uint64_t size() const { return size_; }

    FiniteRepresentation at(std::uint64_t code) const;
    std::uint64_t code_of(const FiniteRepresentation& rep) const;

private:
    Quiver quiver_;
    DimVector dim_;
    int p_;
    int entry_count_;
    std::uint64_t size_;
};

enum class Classification { unstable, semistable_not_stable, stable };

const char* classification_name(Classification c);

/// Exhaustive subrepresentation search: tuples of subspaces closed under all
/// arrow maps, classified against the slope of the whole representation.
Classification classify_stability(const Quiver& quiver, const FiniteRepresentation& rep,
                                  const Stability& theta,
                                  std::uint64_t budget = kDefaultPointBudget);

struct CensusEntry {
    std::uint64_t representative;  // lexicographically least point code of the orbit
    std::uint64_t orbit_size;
    std::uint64_t stabilizer_order;
    Classification cls;
};

struct OrbitCensus {
    Quiver quiver;
    DimVector dim;
    int p;
    Stability theta;
    std::uint64_t group_order;
    std::uint64_t total_points;
    std::vector<CensusEntry> entries;  // ascending representative code
};

/// Full decomposition of R_d(F_p) into base-change orbits with stabilizer
/// orders and stability classification (checked constant on each orbit).
OrbitCensus orbit_census(const Quiver& quiver, const DimVector& dim, int p,
                         const Stability& theta, std::uint64_t budget = kDefaultPointBudget);

/// Stable orbits with endomorphism ring F_p (stabilizer of order p-1).
std::uint64_t count_absolutely_stable(const OrbitCensus& census);
/// Stable orbits whose stabilizer is the unit group of a degree-r field
/// extension (order p^r - 1).
std::uint64_t count_stable_with_end_degree(const OrbitCensus& census, int r);
/// Total number of semistable points (stable orbits included).
std::uint64_t count_semistable_points(const OrbitCensus& census);

void write_census_csv(const OrbitCensus& census, std::ostream& os);

}  // namespace qc
