#include "obound/witness.hpp"

#include "obound/propagation.hpp"
#include "obound/triangle_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace obound {

namespace {

void require_valid(const OverlapGraph& g, const char* who) {
    const ValidationReport report = validate_graph(g);
    if (!report.ok()) {
        throw std::invalid_argument(std::string(who) + ": graph fails validation (first issue: " +
                                    report.issues.front().detail + ")");
    }
}

struct MeasuredEdges {
    int n = 0;
    // hi/lo of the measured value per pair; absent pairs hold NaN.
    std::vector<double> lo, hi;

    explicit MeasuredEdges(const OverlapGraph& g)
        : n(g.vertex_count()),
          lo(static_cast<size_t>(n) * n, std::numeric_limits<double>::quiet_NaN()),
          hi(static_cast<size_t>(n) * n, std::numeric_limits<double>::quiet_NaN()) {
        for (const EdgeRecord& e : g.edges()) {
            if (e.provenance != Provenance::Measured) continue;
            const Interval iv = e.value.interval();
            at(lo, e.i, e.j) = iv.lo();
            at(hi, e.i, e.j) = iv.hi();
        }
    }

    double& at(std::vector<double>& v, int i, int j) const {
        if (i > j) std::swap(i, j);
        return v[static_cast<size_t>(i) * n + j];
    }
    bool has(int i, int j) const {
        if (i > j) std::swap(i, j);
        return !std::isnan(lo[static_cast<size_t>(i) * n + j]);
    }
    double lo_at(int i, int j) const {
        if (i > j) std::swap(i, j);
        return lo[static_cast<size_t>(i) * n + j];
    }
    double hi_at(int i, int j) const {
        if (i > j) std::swap(i, j);
        return hi[static_cast<size_t>(i) * n + j];
    }
};

// Shortest-path predecessors so a violated path bound can name its path.
struct ClassicalPaths {
    int n = 0;
    std::vector<std::vector<double>> dist;
    std::vector<std::vector<int>> via; // intermediate vertex on the best path, or -1

    explicit ClassicalPaths(const MeasuredEdges& m) : n(m.n) {
        const double inf = std::numeric_limits<double>::infinity();
        dist.assign(n, std::vector<double>(n, inf));
        via.assign(n, std::vector<int>(n, -1));
        for (int i = 0; i < n; ++i) dist[i][i] = 0.0;
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                if (!m.has(i, j)) continue;
                dist[i][j] = dist[j][i] = 1.0 - m.lo_at(i, j);
            }
        }
        for (int k = 0; k < n; ++k) {
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (dist[i][k] + dist[k][j] < dist[i][j]) {
                        dist[i][j] = dist[i][k] + dist[k][j];
                        via[i][j] = k;
                    }
                }
            }
        }
    }

    void append_path(int i, int j, std::vector<int>& out) const {
        const int k = via[i][j];
        if (k < 0) {
            out.push_back(j);
            return;
        }
        append_path(i, k, out);
        append_path(k, j, out);
    }

    std::vector<int> path(int i, int j) const {
        std::vector<int> p{i};
        append_path(i, j, p);
        return p;
    }
};

// Triangle lower-bound instances targeting {b,c} through hub a. A range
// value violates only when it lies entirely below the bound, so the bound
// is built from the legs' lower endpoints and compared to the target's
// upper endpoint.
void check_triangles_for_pair(const MeasuredEdges& m, int b, int c, double tol,
                              std::vector<ViolationInstance>& out) {
    if (!m.has(b, c)) return;
    const double observed = m.hi_at(b, c);
    for (int a = 0; a < m.n; ++a) {
        if (a == b || a == c) continue;
        if (!m.has(a, b) || !m.has(a, c)) continue;
        const double bound = m.lo_at(a, b) + m.lo_at(a, c) - 1.0;
        if (observed < bound - tol) {
            out.push_back({CoherenceInequality::TriangleLowerBound, a, b, c, bound, observed,
                           bound - observed, {}});
        }
    }
}

void check_path_for_pair(const MeasuredEdges& m, const ClassicalPaths& paths, int b, int c,
                         double tol, std::vector<ViolationInstance>& out) {
    if (!m.has(b, c)) return;
    const double d = paths.dist[b][c];
    if (!std::isfinite(d)) return;
    const double bound = std::max(0.0, 1.0 - d);
    const double observed = m.hi_at(b, c);
    if (observed < bound - tol) {
        out.push_back({CoherenceInequality::PathLowerBound, -1, b, c, bound, observed,
                       bound - observed, paths.path(b, c)});
    }
}

} // namespace

ClassicalityVerdict classicality_check(const OverlapGraph& g, double tol) {
    require_valid(g, "classicality_check");
    const MeasuredEdges m(g);
    const ClassicalPaths paths(m);
    ClassicalityVerdict verdict;
    for (int b = 0; b < m.n; ++b) {
        for (int c = b + 1; c < m.n; ++c) {
            check_triangles_for_pair(m, b, c, tol, verdict.violations);
            check_path_for_pair(m, paths, b, c, tol, verdict.violations);
        }
    }
    return verdict;
}

ClassicalityVerdict classicality_check_pair(const OverlapGraph& g, int k, int l, double tol) {
    require_valid(g, "classicality_check_pair");
    if (k == l || k < 0 || l < 0 || k >= g.vertex_count() || l >= g.vertex_count()) {
        throw std::invalid_argument("classicality_check_pair: bad pair {" + std::to_string(k) +
                                    ", " + std::to_string(l) + "}");
    }
    const MeasuredEdges m(g);
    if (!m.has(k, l)) {
        throw MissingEdge("no measured value for pair {" + std::to_string(k) + ", " +
                          std::to_string(l) + "}");
    }
    const ClassicalPaths paths(m);
    ClassicalityVerdict verdict;
    const int b = std::min(k, l);
    const int c = std::max(k, l);
    check_triangles_for_pair(m, b, c, tol, verdict.violations);
    check_path_for_pair(m, paths, b, c, tol, verdict.violations);
    return verdict;
}

DimensionVerdict dimension_witness(double r_ab, double r_ac, double r_bc, double tol) {
    const Interval qudit = triangle_interval({r_ab, r_ac}, Model::PureQudit);
    if (!qudit.contains(r_bc, tol)) {
        return DimensionVerdict::InfeasibleForPureStates;
    }
    if (r_bc < f_minus(r_ab, r_ac) - tol) {
        return DimensionVerdict::RequiresDimensionAtLeast3;
    }
    return DimensionVerdict::ConsistentWithQubits;
}

namespace {

// Quantum-classical gap for three states on a Bloch-sphere great circle
// with consecutive separation angles t1 and t2. The realized overlaps are
// cos^2 of half the separations; the middle state is the bound's common
// neighbor for the lower bound and an end state for the upper bound, which
// leaves the gap the same function of (t1, t2) for both kinds.
double violation_gap(double t1, double t2) {
    const double c1 = std::pow(std::cos(0.5 * t1), 2);
    const double c2 = std::pow(std::cos(0.5 * t2), 2);
    if (c1 + c2 <= 1.0) {
        // Outside this region both bounds are trivial.
        return -std::numeric_limits<double>::infinity();
    }
    const double c12 = std::pow(std::cos(0.5 * (t1 + t2)), 2);
    return c1 + c2 - 1.0 - c12;
}

// Golden-section maximization of f on [lo, hi].
template <typename F>
double golden_max(F f, double lo, double hi, int iters) {
    constexpr double inv_phi = 0.6180339887498949;
    double a = lo, b = hi;
    double x1 = b - inv_phi * (b - a);
    double x2 = a + inv_phi * (b - a);
    double f1 = f(x1), f2 = f(x2);
    for (int i = 0; i < iters; ++i) {
        if (f1 < f2) {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + inv_phi * (b - a);
            f2 = f(x2);
        } else {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - inv_phi * (b - a);
            f1 = f(x1);
        }
    }
    return 0.5 * (a + b);
}

} // namespace

ViolationExtremum max_violation_search(ViolationKind kind, int grid_steps, int refine_iters) {
    if (grid_steps < 16) {
        throw std::invalid_argument("max_violation_search: grid_steps must be >= 16");
    }
    const double half_pi = std::numbers::pi / 2.0;
    const double h = half_pi / (grid_steps - 1);

    // Coarse grid with lexicographic (beta, gamma) tie-breaking.
    double best = -std::numeric_limits<double>::infinity();
    double beta = 0.0, gamma = 0.0;
    for (int i = 0; i < grid_steps; ++i) {
        const double t1 = i * h;
        for (int j = 0; j < grid_steps; ++j) {
            const double t2 = j * h;
            const double v = violation_gap(t1, t2);
            if (v > best) {
                best = v;
                beta = t1;
                gamma = t2;
            }
        }
    }

    // Coordinatewise golden-section refinement around the grid argmax.
    for (int round = 0; round < refine_iters; ++round) {
        beta = golden_max([&](double t) { return violation_gap(t, gamma); },
                          std::max(0.0, beta - h), std::min(half_pi, beta + h), 64);
        gamma = golden_max([&](double t) { return violation_gap(beta, t); },
                           std::max(0.0, gamma - h), std::min(half_pi, gamma + h), 64);
    }

    return ViolationExtremum{violation_gap(beta, gamma), beta, gamma, kind};
}

} // namespace obound
