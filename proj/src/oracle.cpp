#include "quivercount/oracle.hpp"

#include <algorithm>
#include <functional>
#include <ostream>
#include <stdexcept>

namespace qc {

BudgetExceeded::BudgetExceeded(const std::string& what_kind, std::uint64_t required,
                               std::uint64_t budget)
    : std::runtime_error(what_kind + " needs " + std::to_string(required) +
                         " points, budget is " + std::to_string(budget)),
      required_(required),
      budget_(budget) {}

FpMatrix::FpMatrix(int rows, int cols, int p)
    : rows_(rows), cols_(cols), p_(p), a_(static_cast<size_t>(rows) * cols, 0) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix shape");
    if (p < 2) throw std::invalid_argument("modulus must be at least 2");
}

FpMatrix FpMatrix::identity(int n, int p) {
    FpMatrix m(n, n, p);
    for (int i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

FpMatrix FpMatrix::operator*(const FpMatrix& rhs) const {
    if (cols_ != rhs.rows_ || p_ != rhs.p_) throw std::invalid_argument("matrix shape mismatch");
    FpMatrix out(rows_, rhs.cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int k = 0; k < cols_; ++k) {
            int v = at(i, k);
            if (v == 0) continue;
            for (int j = 0; j < rhs.cols_; ++j)
                out.set(i, j, static_cast<std::uint8_t>((out.at(i, j) + v * rhs.at(k, j)) % p_));
        }
    return out;
}

namespace {

int mod_inverse(int a, int p) {
    // p is tiny and prime; scan
    for (int x = 1; x < p; ++x)
        if (a * x % p == 1) return x;
    throw std::domain_error("no inverse modulo p");
}

}  // namespace

int FpMatrix::row_reduce() {
    int rank = 0;
    for (int col = 0; col < cols_ && rank < rows_; ++col) {
        int pivot = -1;
        for (int r = rank; r < rows_; ++r)
            if (at(r, col) != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        for (int j = 0; j < cols_; ++j) std::swap(a_[static_cast<size_t>(rank) * cols_ + j],
                                                  a_[static_cast<size_t>(pivot) * cols_ + j]);
        int inv = mod_inverse(at(rank, col), p_);
        for (int j = 0; j < cols_; ++j)
            set(rank, j, static_cast<std::uint8_t>(at(rank, j) * inv % p_));
        for (int r = 0; r < rows_; ++r) {
            if (r == rank || at(r, col) == 0) continue;
            int factor = at(r, col);
            for (int j = 0; j < cols_; ++j)
                set(r, j, static_cast<std::uint8_t>((at(r, j) + (p_ - factor) * at(rank, j)) % p_));
        }
        ++rank;
    }
    return rank;
}

std::optional<FpMatrix> FpMatrix::inverse() const {
    if (rows_ != cols_) throw std::invalid_argument("inverse of non-square matrix");
    FpMatrix work(rows_, 2 * cols_, p_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) work.set(i, j, at(i, j));
        work.set(i, cols_ + i, 1);
    }
    if (work.row_reduce() < rows_) return std::nullopt;
    FpMatrix inv(rows_, cols_, p_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.set(i, j, work.at(i, cols_ + j));
    return inv;
}

std::vector<FpMatrix> all_subspaces(int dim, int p) {
    // RREF bases enumerated by pivot-column pattern; each subspace once.
    std::vector<FpMatrix> out;
    out.emplace_back(0, dim, p);  // zero subspace
    for (int rank = 1; rank <= dim; ++rank) {
        std::vector<int> pivots(static_cast<size_t>(rank));
        std::function<void(int, int)> choose = [&](int idx, int from) {
            if (idx == rank) {
                // free entries: row i, columns right of its pivot, non-pivot
                std::vector<std::pair<int, int>> free_cells;
                for (int i = 0; i < rank; ++i)
                    for (int c = pivots[static_cast<size_t>(i)] + 1; c < dim; ++c)
                        if (std::find(pivots.begin(), pivots.end(), c) == pivots.end())
                            free_cells.emplace_back(i, c);
                std::vector<std::uint8_t> fill(free_cells.size(), 0);
                while (true) {
                    FpMatrix basis(rank, dim, p);
                    for (int i = 0; i < rank; ++i) basis.set(i, pivots[static_cast<size_t>(i)], 1);
                    for (size_t k = 0; k < free_cells.size(); ++k)
                        basis.set(free_cells[k].first, free_cells[k].second, fill[k]);
                    out.push_back(std::move(basis));
                    size_t carry = 0;
                    while (carry < fill.size() && ++fill[carry] == p) fill[carry++] = 0;
                    if (carry == fill.size()) break;
                }
                return;
            }
            for (int c = from; c < dim; ++c) {
                pivots[static_cast<size_t>(idx)] = c;
                choose(idx + 1, c + 1);
            }
        };
        choose(0, 0);
    }
    return out;
}

std::vector<FpMatrix> general_linear_group(int n, int p, std::uint64_t budget) {
    std::uint64_t candidates = 1;
    for (int i = 0; i < n * n; ++i) {
        candidates *= static_cast<std::uint64_t>(p);
        if (candidates > budget)
            throw BudgetExceeded("general linear group enumeration", candidates, budget);
    }
    std::vector<FpMatrix> out;
    FpMatrix m(n, n, p);
    std::vector<std::uint8_t> digits(static_cast<size_t>(n) * n, 0);
    for (std::uint64_t code = 0; code < candidates; ++code) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m.set(i, j, digits[static_cast<size_t>(i) * n + j]);
        FpMatrix copy = m;
        if (copy.row_reduce() == n) out.push_back(m);
        // increment base-p counter, last entry fastest (lexicographic order)
        for (int k = n * n - 1; k >= 0; --k) {
            if (++digits[static_cast<size_t>(k)] < p) break;
            digits[static_cast<size_t>(k)] = 0;
        }
    }
    return out;
}

RepresentationSpace::RepresentationSpace(Quiver quiver, DimVector dim, int p, std::uint64_t budget)
    : quiver_(std::move(quiver)), dim_(std::move(dim)), p_(p) {
    if (dim_.size() != quiver_.vertex_count())
        throw std::invalid_argument("dimension vector does not match quiver");
    if (p < 2) throw std::invalid_argument("modulus must be at least 2");
    entry_count_ = static_cast<int>(arrow_form(quiver_, dim_, dim_));
    size_ = 1;
    for (int i = 0; i < entry_count_; ++i) {
        size_ *= static_cast<std::uint64_t>(p_);
        if (size_ > budget) throw BudgetExceeded("representation enumeration", size_, budget);
    }
}

FiniteRepresentation RepresentationSpace::at(std::uint64_t code) const {
    if (code >= size_) throw std::out_of_range("representation code out of range");
    FiniteRepresentation rep{dim_, p_, {}};
    rep.matrices.reserve(quiver_.arrows().size());
    // first entry is the most significant digit
    std::vector<std::uint8_t> digits(static_cast<size_t>(entry_count_));
    for (int k = entry_count_ - 1; k >= 0; --k) {
        digits[static_cast<size_t>(k)] = static_cast<std::uint8_t>(code % p_);
        code /= static_cast<std::uint64_t>(p_);
    }
    size_t pos = 0;
    for (const auto& [s, t] : quiver_.arrows()) {
        FpMatrix m(dim_[t], dim_[s], p_);
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j) m.set(i, j, digits[pos++]);
        rep.matrices.push_back(std::move(m));
    }
    return rep;
}

std::uint64_t RepresentationSpace::code_of(const FiniteRepresentation& rep) const {
    std::uint64_t code = 0;
    for (const FpMatrix& m : rep.matrices)
        for (int i = 0; i < m.rows(); ++i)
            for (int j = 0; j < m.cols(); ++j)
                code = code * static_cast<std::uint64_t>(p_) + m.at(i, j);
    return code;
}

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::unstable: return "unstable";
        case Classification::semistable_not_stable: return "semistable-not-stable";
        case Classification::stable: return "stable";
    }
    return "?";
}

namespace {

/// Is v in the row space of the RREF basis?
bool in_row_space(const FpMatrix& basis, const std::vector<int>& v) {
    int p = basis.modulus();
    std::vector<int> w = v;
    for (int r = 0; r < basis.rows(); ++r) {
        int pivot = -1;
        for (int c = 0; c < basis.cols(); ++c)
            if (basis.at(r, c) != 0) {
                pivot = c;
                break;
            }
        if (pivot < 0) continue;
        int factor = w[static_cast<size_t>(pivot)];
        if (factor == 0) continue;
        for (int c = 0; c < basis.cols(); ++c)
            w[static_cast<size_t>(c)] = (w[static_cast<size_t>(c)] + (p - factor) * basis.at(r, c)) % p;
    }
    return std::all_of(w.begin(), w.end(), [](int x) { return x == 0; });
}

Classification classify_against(const Quiver& quiver, const FiniteRepresentation& rep,
                                const Stability& theta,
                                const std::vector<std::vector<FpMatrix>>& vertex_subspaces) {
    const DimVector& d = rep.dim;
    const int p = rep.modulus;
    long long theta_m = theta(d);
    long long dim_m = d.total();
    bool any_equal = false;

    std::vector<size_t> choice(static_cast<size_t>(d.size()), 0);
    while (true) {
        // closure of the subspace tuple under every arrow map
        bool closed = true;
        long long sub_total = 0;
        long long sub_theta = 0;
        for (int i = 0; i < d.size() && closed; ++i) {
            int rank = vertex_subspaces[static_cast<size_t>(i)][choice[static_cast<size_t>(i)]].rows();
            sub_total += rank;
            sub_theta += theta.weights[static_cast<size_t>(i)] * rank;
        }
        if (sub_total != 0 && sub_total != dim_m) {
            for (size_t a = 0; a < quiver.arrows().size() && closed; ++a) {
                const auto& [s, t] = quiver.arrows()[a];
                const FpMatrix& u = vertex_subspaces[static_cast<size_t>(s)][choice[static_cast<size_t>(s)]];
                const FpMatrix& w = vertex_subspaces[static_cast<size_t>(t)][choice[static_cast<size_t>(t)]];
                const FpMatrix& map = rep.matrices[a];
                for (int r = 0; r < u.rows() && closed; ++r) {
                    std::vector<int> image(static_cast<size_t>(map.rows()), 0);
                    for (int i = 0; i < map.rows(); ++i) {
                        int acc = 0;
                        for (int j = 0; j < map.cols(); ++j) acc += map.at(i, j) * u.at(r, j);
                        image[static_cast<size_t>(i)] = acc % p;
                    }
                    if (!in_row_space(w, image)) closed = false;
                }
            }
            if (closed) {
                // mu(U) vs mu(M) by cross-multiplication
                long long lhs = sub_theta * dim_m;
                long long rhs = theta_m * sub_total;
                if (lhs > rhs) return Classification::unstable;
                if (lhs == rhs) any_equal = true;
            }
        }
        size_t k = 0;
        while (k < choice.size() && ++choice[k] == vertex_subspaces[k].size()) choice[k++] = 0;
        if (k == choice.size()) break;
    }
    return any_equal ? Classification::semistable_not_stable : Classification::stable;
}

std::vector<std::vector<FpMatrix>> subspace_lists(const DimVector& d, int p,
                                                  std::uint64_t budget) {
    std::vector<std::vector<FpMatrix>> lists;
    std::uint64_t tuple_count = 1;
    for (int i = 0; i < d.size(); ++i) {
        lists.push_back(all_subspaces(d[i], p));
        tuple_count *= lists.back().size();
        if (tuple_count > budget)
            throw BudgetExceeded("subrepresentation search", tuple_count, budget);
    }
    return lists;
}

}  // namespace

Classification classify_stability(const Quiver& quiver, const FiniteRepresentation& rep,
                                  const Stability& theta, std::uint64_t budget) {
    if (rep.dim.is_zero()) throw std::domain_error("classification of the zero representation");
    return classify_against(quiver, rep, theta, subspace_lists(rep.dim, rep.modulus, budget));
}

OrbitCensus orbit_census(const Quiver& quiver, const DimVector& dim, int p,
                         const Stability& theta, std::uint64_t budget) {
    RepresentationSpace space(quiver, dim, p, budget);

    // one GL list per vertex, combined into the full base change group
    std::vector<std::vector<FpMatrix>> gl;
    std::vector<std::vector<FpMatrix>> gl_inv;
    std::uint64_t group_order = 1;
    for (int i = 0; i < dim.size(); ++i) {
        gl.push_back(general_linear_group(dim[i], p, budget));
        std::vector<FpMatrix> inv;
        inv.reserve(gl.back().size());
        for (const FpMatrix& g : gl.back()) inv.push_back(*g.inverse());
        gl_inv.push_back(std::move(inv));
        group_order *= gl.back().size();
        if (group_order > budget) throw BudgetExceeded("group enumeration", group_order, budget);
    }

    OrbitCensus census{quiver, dim, p, theta, group_order, space.size(), {}};
    std::vector<bool> visited(space.size(), false);
    std::vector<std::uint64_t> orbit;
    const auto subspaces = subspace_lists(dim, p, budget);

    for (std::uint64_t code = 0; code < space.size(); ++code) {
        if (visited[code]) continue;
        FiniteRepresentation rep = space.at(code);
        Classification cls = classify_against(quiver, rep, theta, subspaces);

        // full sweep over the group: orbit and stabilizer in one pass
        orbit.clear();
        std::uint64_t stabilizer = 0;
        std::vector<size_t> pick(static_cast<size_t>(dim.size()), 0);
        while (true) {
            FiniteRepresentation moved = rep;
            for (size_t a = 0; a < quiver.arrows().size(); ++a) {
                const auto& [s, t] = quiver.arrows()[a];
                moved.matrices[a] = gl[static_cast<size_t>(t)][pick[static_cast<size_t>(t)]] *
                                    rep.matrices[a] *
                                    gl_inv[static_cast<size_t>(s)][pick[static_cast<size_t>(s)]];
            }
            std::uint64_t image = space.code_of(moved);
            if (image == code) ++stabilizer;
            orbit.push_back(image);
            size_t k = 0;
            while (k < pick.size() && ++pick[k] == gl[k].size()) pick[k++] = 0;
            if (k == pick.size()) break;
        }
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        if (orbit.front() != code)
            throw std::logic_error("orbit representative is not lexicographically least");
        if (orbit.size() * stabilizer != group_order)
            throw std::logic_error("orbit-stabilizer product mismatch");
        for (std::uint64_t member : orbit) {
            if (member != code &&
                classify_against(quiver, space.at(member), theta, subspaces) != cls)
                throw std::logic_error("stability classification not constant on orbit");
            visited[member] = true;
        }
        census.entries.push_back(CensusEntry{code, orbit.size(), stabilizer, cls});
    }

    std::uint64_t covered = 0;
    for (const CensusEntry& e : census.entries) covered += e.orbit_size;
    if (covered != space.size()) throw std::logic_error("orbits do not partition the point set");
    return census;
}

std::uint64_t count_absolutely_stable(const OrbitCensus& census) {
    return count_stable_with_end_degree(census, 1);
}

std::uint64_t count_stable_with_end_degree(const OrbitCensus& census, int r) {
    if (r < 1) throw std::domain_error("endomorphism degree must be positive");
    std::uint64_t wanted = 1;
    for (int i = 0; i < r; ++i) wanted *= static_cast<std::uint64_t>(census.p);
    wanted -= 1;  // |F_{p^r}^*|
    std::uint64_t n = 0;
    for (const CensusEntry& e : census.entries)
        if (e.cls == Classification::stable && e.stabilizer_order == wanted) ++n;
    return n;
}

std::uint64_t count_semistable_points(const OrbitCensus& census) {
    std::uint64_t n = 0;
    for (const CensusEntry& e : census.entries)
        if (e.cls != Classification::unstable) n += e.orbit_size;
    return n;
}

void write_census_csv(const OrbitCensus& census, std::ostream& os) {
    os << "orbit_representative_index,orbit_size,stabilizer_order,classification\n";
    for (const CensusEntry& e : census.entries)
        os << e.representative << ',' << e.orbit_size << ',' << e.stabilizer_order << ','
           << classification_name(e.cls) << '\n';
}

}  // namespace qc
