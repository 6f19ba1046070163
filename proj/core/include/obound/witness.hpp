#ifndef OBOUND_WITNESS_HPP
#define OBOUND_WITNESS_HPP

#include "obound/overlap_graph.hpp"

#include <stdexcept>
#include <vector>

namespace obound {

/// Which coherence inequality a measured graph violated.
///  - TriangleLowerBound: r_bc >= r_ab + r_ac - 1 for a common neighbor.
///    (Its index permutations cover the matching upper bounds.)
///  - PathLowerBound: r_kl >= 1 - sum of (1 - r) along a connecting path.
enum class CoherenceInequality { TriangleLowerBound, PathLowerBound };

struct ViolationInstance {
    CoherenceInequality inequality;
    int hub = -1;      // common neighbor for triangle instances, -1 for paths
    int b = -1;        // target pair
    int c = -1;
    double bound = 0.0;     // smallest value the measurement had to reach
    double observed = 0.0;  // what was actually measured
    double magnitude = 0.0; // bound - observed, > 0
    std::vector<int> path;  // witnessing path (b .. c) for path instances
};

struct ClassicalityVerdict {
    std::vector<ViolationInstance> violations;
    bool consistent() const { return violations.empty(); }
};

/// Thrown when a pair-targeted check has no measured value to test.
class MissingEdge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Tests every measured pair against the classical bounds: all triangle
/// instances over measured triangles, and the shortest-path lower bound for
/// every measured pair. Range-valued measurements count as violations only
/// when the whole range violates. Any violation certifies that no single
/// basis diagonalizes all the states.
///
/// Precondition: validate_graph(g).ok().
ClassicalityVerdict classicality_check(const OverlapGraph& g, double tol = 1e-9);

/// Same checks restricted to instances that target the pair {k,l}.
/// Throws MissingEdge when {k,l} has no measured value.
ClassicalityVerdict classicality_check_pair(const OverlapGraph& g, int k, int l,
                                            double tol = 1e-9);

/// Outcome of testing three measured overlaps against dimension-dependent
/// bounds. InfeasibleForPureStates takes precedence: data outside the
/// unrestricted pure-state envelope points at measurement error, not at
/// Hilbert-space dimension.
enum class DimensionVerdict {
    ConsistentWithQubits,
    RequiresDimensionAtLeast3,
    InfeasibleForPureStates,
};

constexpr const char* to_string(DimensionVerdict v) {
    switch (v) {
        case DimensionVerdict::ConsistentWithQubits: return "ConsistentWithQubits";
        case DimensionVerdict::RequiresDimensionAtLeast3: return "RequiresDimensionAtLeast3";
        case DimensionVerdict::InfeasibleForPureStates: return "InfeasibleForPureStates";
    }
    return "?";
}

/// Decides whether (r_ab, r_ac, r_bc) can come from three qubits. The qubit
/// lower bound applies without the r_ab + r_ac > 1 gate, so a measured r_bc
/// below it while inside the general pure-state range witnesses dimension
/// of at least 3. Disagreement with qudits is only possible when
/// r_ab + r_ac <= 1.
DimensionVerdict dimension_witness(double r_ab, double r_ac, double r_bc,
                                   double tol = 1e-9);

/// Which classical bound the search maximally violates with qubit states.
enum class ViolationKind { LowerBound, UpperBound };

/// Maximizer of the quantum-classical gap. beta and gamma are the two
/// consecutive separation angles of the three states on a Bloch-sphere
/// great circle (the bound's common neighbor sits between the target pair
/// for LowerBound, at one end for UpperBound). The overlaps realized are
/// cos^2 of half the separating angles.
struct ViolationExtremum {
    double violation = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
    ViolationKind kind = ViolationKind::LowerBound;
};

/// Maximizes the gap between a classical triangle bound and the matching
/// attainable quantum value over beta, gamma in [0, pi/2], restricted to
/// configurations where both bounds are nontrivial. Deterministic coarse
/// grid (lexicographic tie-break on the argmax) followed by coordinatewise
/// golden-section refinement.
///
/// Precondition: grid_steps >= 16; throws std::invalid_argument otherwise.
ViolationExtremum max_violation_search(ViolationKind kind, int grid_steps = 512,
                                       int refine_iters = 32);

} // namespace obound

#endif // OBOUND_WITNESS_HPP
