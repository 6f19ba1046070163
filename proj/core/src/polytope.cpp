#include "obound/polytope.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace obound::polytope {

namespace {

void require_m(int m) {
    if (m < 2 || m > kMaxPropositions) {
        throw std::invalid_argument("proposition count " + std::to_string(m) +
                                    " outside [2, " + std::to_string(kMaxPropositions) +
                                    "] (TooLarge)");
    }
}

// Vertex for assignment index k, propositions ordered most-significant
// first so rows come out in lexicographic order.
std::vector<std::uint8_t> vertex_row(int m, std::uint64_t k) {
    std::vector<std::uint8_t> row(m + 1);
    for (int i = 0; i < m; ++i) {
        row[i] = static_cast<std::uint8_t>((k >> (m - 1 - i)) & 1u);
    }
    row[m] = (k == (std::uint64_t(1) << m) - 1) ? 1 : 0;
    return row;
}

// Incremental affine-rank accumulator: Gaussian elimination over the
// difference vectors from the first saturating vertex.
class AffineRank {
public:
    explicit AffineRank(int width) : width_(width) {}

    void add(const std::vector<std::uint8_t>& row) {
        if (!have_base_) {
            base_.assign(row.begin(), row.end());
            have_base_ = true;
            return;
        }
        std::vector<double> d(width_);
        for (int i = 0; i < width_; ++i) d[i] = double(row[i]) - base_[i];
        for (const auto& [pivot, vec] : basis_) {
            const double factor = d[pivot];
            if (factor == 0.0) continue;
            for (int i = 0; i < width_; ++i) d[i] -= factor * vec[i];
        }
        int pivot = -1;
        double magnitude = kRankThreshold;
        for (int i = 0; i < width_; ++i) {
            if (std::abs(d[i]) > magnitude) {
                magnitude = std::abs(d[i]);
                pivot = i;
            }
        }
        if (pivot < 0) return;
        for (int i = 0; i < width_; ++i) d[i] /= d[pivot];
        d[pivot] = 1.0;
        basis_.emplace_back(pivot, std::move(d));
    }

    int rank() const { return static_cast<int>(basis_.size()); }

private:
    static constexpr double kRankThreshold = 1e-9;
    int width_;
    bool have_base_ = false;
    std::vector<double> base_;
    std::vector<std::pair<int, std::vector<double>>> basis_;
};

} // namespace

TruthAssignmentTable and_polytope_vertices(int m) {
    require_m(m);
    TruthAssignmentTable table;
    table.m = m;
    const std::uint64_t rows = std::uint64_t(1) << m;
    table.rows.reserve(rows);
    for (std::uint64_t k = 0; k < rows; ++k) {
        table.rows.push_back(vertex_row(m, k));
    }
    return table;
}

bool BooleReport::all_satisfied() const {
    if (nonnegativity.violations || lower_bound.violations) return false;
    for (const auto& u : upper_bounds) {
        if (u.violations) return false;
    }
    return true;
}

BooleReport check_boole_inequalities(int m) {
    require_m(m);
    BooleReport report;
    report.m = m;
    report.nonnegativity.name = "conjunction >= 0";
    report.lower_bound.name = "conjunction >= 1 - m + sum";
    report.upper_bounds.resize(m);
    for (int i = 0; i < m; ++i) {
        report.upper_bounds[i].name = "conjunction <= proposition " + std::to_string(i);
    }

    const std::uint64_t rows = std::uint64_t(1) << m;
    for (std::uint64_t k = 0; k < rows; ++k) {
        const int sum = std::popcount(k);
        const int conj = (k == rows - 1) ? 1 : 0;

        if (conj < 0) ++report.nonnegativity.violations;
        if (conj == 0) ++report.nonnegativity.saturating;

        const int lower_rhs = 1 - m + sum;
        if (conj < lower_rhs) ++report.lower_bound.violations;
        if (conj == lower_rhs) ++report.lower_bound.saturating;

        for (int i = 0; i < m; ++i) {
            const int a_i = static_cast<int>((k >> (m - 1 - i)) & 1u);
            if (conj > a_i) ++report.upper_bounds[i].violations;
            if (conj == a_i) ++report.upper_bounds[i].saturating;
        }
    }
    report.rows_checked = rows;
    return report;
}

int facet_dimension(int m, BooleInequality which) {
    require_m(m);
    if (which.kind == BooleInequality::Kind::UpperBound &&
        (which.index < 0 || which.index >= m)) {
        throw std::invalid_argument("facet_dimension: upper-bound index outside [0, m)");
    }

    AffineRank rank(m + 1);
    const std::uint64_t rows = std::uint64_t(1) << m;
    for (std::uint64_t k = 0; k < rows; ++k) {
        const int sum = std::popcount(k);
        const int conj = (k == rows - 1) ? 1 : 0;
        bool saturates;
        if (which.kind == BooleInequality::Kind::LowerBound) {
            saturates = conj == 1 - m + sum;
        } else {
            const int a_i = static_cast<int>((k >> (m - 1 - which.index)) & 1u);
            saturates = conj == a_i;
        }
        if (saturates) rank.add(vertex_row(m, k));
    }
    return rank.rank();
}

} // namespace obound::polytope
