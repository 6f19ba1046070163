#ifndef OBOUND_ORACLE_HPP
#define OBOUND_ORACLE_HPP

#include "obound/interval.hpp"
#include "obound/model.hpp"
#include "obound/overlap_graph.hpp"

#include <complex>
#include <cstdint>
#include <vector>

// Independent brute-force and Monte Carlo checks. Everything in here is
// deliberately implemented from the state parameterizations directly, not
// through the closed-form bounds it is used to verify.
namespace obound::oracle {

/// A pure state as a normalized complex amplitude vector.
struct PureState {
    std::vector<std::complex<double>> amplitudes;

    int dimension() const { return static_cast<int>(amplitudes.size()); }
    double norm_sq() const;
};

/// n independent Haar-random pure states in dimension d: each is a vector
/// of standard complex Gaussians, normalized. Deterministic for a fixed
/// seed.
std::vector<PureState> haar_pure_states(int n, int d, std::uint64_t seed);

/// Symmetric matrix of pairwise overlaps |<psi_i|psi_j>|^2, with unit
/// diagonal. Throws std::invalid_argument on mixed dimensions.
std::vector<std::vector<double>> overlap_matrix(const std::vector<PureState>& states);

struct ScanExtremes {
    double min_value = 0.0;
    double max_value = 0.0;
};

/// Brute-force extremes of the third overlap for fixed r_ab, r_ac: scans the
/// two free parameters of the general three-state parameterization (the
/// out-of-plane angle and the relative phase) on a steps x steps grid.
/// Precondition: steps >= 64.
ScanExtremes triangle_scan(double r_ab, double r_ac, int steps);

/// A qubit density matrix [[rho0, rho1], [conj(rho1), 1-rho0]].
/// Positivity requires |rho1|^2 <= rho0 * (1 - rho0).
struct QubitDensityMatrix {
    double rho0 = 0.5;
    std::complex<double> rho1 = 0.0;

    /// rho = (I + b . sigma) / 2 for a Bloch vector of length <= 1.
    static QubitDensityMatrix from_bloch(double x, double y, double z);
    bool positive_semidefinite(double tol = 1e-12) const;
};

/// Linear fidelity tr(rho sigma) of two qubit density matrices.
double mixed_overlap(const QubitDensityMatrix& rho, const QubitDensityMatrix& sigma);

struct MixedQubitTriple {
    QubitDensityMatrix a, b, c;
    double r_ab = 0.0, r_ac = 0.0, r_bc = 0.0;
};

/// count triples of qubit density matrices with Bloch vectors uniform in the
/// unit ball, plus their three pairwise fidelities. Deterministic per seed.
std::vector<MixedQubitTriple> random_mixed_qubit_triples(int count, std::uint64_t seed);

struct SoundnessReport {
    bool pass = false;
    int held_out_pairs = 0;
    int violations = 0;
    double worst_excess = 0.0; // how far outside an interval a true value fell
    int resamples = 0;         // edge subsets rejected as disconnected
    bool infeasible = false;   // inference rejected data from actual states
};

/// End-to-end containment check: samples n Haar states in dimension d, keeps
/// a random connected subset of the true overlaps as Measured (each pair
/// kept with probability edge_fraction; disconnected draws are resampled,
/// up to a cap), runs complete_and_tighten, and verifies every held-out true
/// overlap lies inside its inferred interval within 1e-9.
///
/// Preconditions: n >= 3, 0 < edge_fraction <= 1, model != Classical, and
/// d == 2 when model == Qubit. Throws std::invalid_argument on violations
/// and std::runtime_error("DisconnectedSample...") past the resample cap.
SoundnessReport soundness_trial(int n, int d, double edge_fraction, Model model,
                                std::uint64_t seed);

/// Exhaustive classical lower bound for the pair {k,l}: maximizes
/// 1 - m' + sum(r) over all connected measured-edge subgraphs containing
/// both vertices, clamped at 0. Exponential in the edge count; throws
/// std::invalid_argument("TooLarge...") beyond 7 vertices.
double connected_subgraph_lower(const OverlapGraph& g, int k, int l);

/// Hull of triangle_interval over a steps x steps grid of the rectangle
/// rx x ry; the brute-force reference for triangle_interval_lifted.
/// Precondition: steps >= 100.
Interval rect_grid_extremes(const Interval& rx, const Interval& ry, Model model,
                            int steps);

/// Stable per-trial seed derivation (splitmix64 of master + index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

} // namespace obound::oracle

#endif // OBOUND_ORACLE_HPP
