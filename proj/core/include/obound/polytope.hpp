#ifndef OBOUND_POLYTOPE_HPP
#define OBOUND_POLYTOPE_HPP

#include <cstdint>
#include <string>
#include <vector>

// The correlation polytope of m propositions and their joint conjunction:
// vertex enumeration, validity of the coherence inequalities, and facet
// rank checks.
namespace obound::polytope {

/// Enumeration cap: 2^20 rows.
inline constexpr int kMaxPropositions = 20;

/// All 2^m deterministic truth assignments, one row per assignment in
/// lexicographic order, with the AND of the m propositions appended as the
/// last column. Exactly one row (all ones) ends in 1.
struct TruthAssignmentTable {
    int m = 0;
    std::vector<std::vector<std::uint8_t>> rows; // 2^m rows of length m+1
};

/// Throws std::invalid_argument outside 2 <= m <= kMaxPropositions.
TruthAssignmentTable and_polytope_vertices(int m);

struct InequalityStats {
    std::string name;
    std::uint64_t violations = 0;
    std::uint64_t saturating = 0;
};

struct BooleReport {
    int m = 0;
    std::uint64_t rows_checked = 0;
    InequalityStats nonnegativity;           // p(and) >= 0
    InequalityStats lower_bound;             // p(and) >= 1 - m + sum p(a_i)
    std::vector<InequalityStats> upper_bounds; // p(and) <= p(a_i), one per i

    bool all_satisfied() const;
};

/// Verifies every vertex against the lower-bound inequality and all m
/// upper bounds, and counts the saturating vertices per inequality. The
/// polytope is the convex hull of its vertices, so vertex satisfaction
/// certifies the whole polytope. Rows are generated on the fly; no table
/// is materialized.
BooleReport check_boole_inequalities(int m);

struct BooleInequality {
    enum class Kind { LowerBound, UpperBound };
    Kind kind = Kind::LowerBound;
    int index = -1; // proposition index for UpperBound

    static BooleInequality lower() { return {Kind::LowerBound, -1}; }
    static BooleInequality upper(int i) { return {Kind::UpperBound, i}; }
};

/// Affine dimension of the inequality's saturating vertex set (rank of
/// differences from one saturating vertex, threshold 1e-9). The inequality
/// is a facet iff this equals m, one less than the polytope's dimension.
int facet_dimension(int m, BooleInequality which);

} // namespace obound::polytope

#endif // OBOUND_POLYTOPE_HPP
