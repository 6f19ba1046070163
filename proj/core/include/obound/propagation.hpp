#ifndef OBOUND_PROPAGATION_HPP
#define OBOUND_PROPAGATION_HPP

#include "obound/model.hpp"
#include "obound/overlap_graph.hpp"

#include <map>
#include <optional>
#include <utility>

namespace obound {

/// A triangle whose constraint cannot be satisfied: the interval implied for
/// pair {b,c} through common_neighbor has empty intersection with the value
/// the pair already carries.
struct InfeasibilityWitness {
    int b = -1;
    int c = -1;
    int common_neighbor = -1;
    Interval implied;
    Interval existing;
};

struct InferenceResult {
    /// Every pair carries a value: Measured edges verbatim from the input,
    /// all other pairs Inferred ranges.
    OverlapGraph complete;
    int iterations = 0;
    bool converged = false;
    /// False when the input edges do not connect all vertices; pairs across
    /// components keep the trivial range [0,1].
    bool input_connected = true;
    std::optional<InfeasibilityWitness> infeasible_witness;

    bool infeasible() const { return infeasible_witness.has_value(); }
};

/// Completes the graph to all vertex pairs and tightens inferred intervals
/// to a fixpoint by repeated triangle bounds.
///
/// Every absent pair starts at [0,1] (Inferred). Each sweep recomputes, for
/// every pair {b,c} and every other vertex a, the interval implied by the
/// current {a,b} and {a,c} values, and intersects the implications into the
/// pair. Sweeps are synchronous: a sweep reads only the previous sweep's
/// values, so results do not depend on iteration order. Measured pairs are
/// never changed; an implied interval that misses a measured value (or an
/// accumulated inferred one) makes the data infeasible and stops inference,
/// reporting the witness with the lowest (common_neighbor, pair) indices.
///
/// Sweeping stops when the largest endpoint movement is at most change_tol
/// or after max_iters sweeps (max_iters <= 0 selects 100 * n^2).
///
/// Precondition: validate_graph(g).ok(); throws std::invalid_argument
/// otherwise.
InferenceResult complete_and_tighten(const OverlapGraph& g, Model model,
                                     int max_iters = 0,
                                     double change_tol = 1e-12);

/// Classical lower bounds for every vertex pair: 1 - d(k,l) clamped at 0,
/// where d is the shortest-path distance under edge weights 1 - r. Only
/// Measured edges contribute (interval values enter via their lower
/// endpoint); pairs in different components get 0.
///
/// Precondition: validate_graph(g).ok().
std::map<std::pair<int, int>, double> classical_lower_map(const OverlapGraph& g);

} // namespace obound

#endif // OBOUND_PROPAGATION_HPP
