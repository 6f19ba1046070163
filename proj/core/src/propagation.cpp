#include "obound/propagation.hpp"

#include "obound/triangle_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace obound {

namespace {

void require_valid(const OverlapGraph& g, const char* who) {
    const ValidationReport report = validate_graph(g);
    if (!report.ok()) {
        throw std::invalid_argument(std::string(who) + ": graph fails validation (" +
                                    std::to_string(report.issues.size()) + " issue(s), first: " +
                                    report.issues.front().detail + ")");
    }
}

struct PairState {
    Interval iv = Interval::full();
    bool measured = false;
};

// Upper-triangle indexing for unordered pairs i < j.
struct PairTable {
    int n;
    std::vector<PairState> cells;

    explicit PairTable(int n_) : n(n_), cells(static_cast<size_t>(n_) * n_) {}
    PairState& at(int i, int j) {
        if (i > j) std::swap(i, j);
        return cells[static_cast<size_t>(i) * n + j];
    }
    const PairState& at(int i, int j) const {
        return const_cast<PairTable*>(this)->at(i, j);
    }
};

struct Conflict {
    int hub;
    int b;
    int c;
    Interval implied;
    Interval existing;

    bool before(const Conflict& o) const {
        if (hub != o.hub) return hub < o.hub;
        if (b != o.b) return b < o.b;
        return c < o.c;
    }
};

} // namespace

InferenceResult complete_and_tighten(const OverlapGraph& g, Model model, int max_iters,
                                     double change_tol) {
    require_valid(g, "complete_and_tighten");
    const int n = g.vertex_count();
    if (max_iters <= 0) max_iters = 100 * n * n;

    PairTable state(n);
    for (const EdgeRecord& e : g.edges()) {
        PairState& cell = state.at(e.i, e.j);
        cell.iv = e.value.interval();
        cell.measured = (e.provenance == Provenance::Measured);
    }

    InferenceResult out{OverlapGraph(n, {}), 0, false, g.is_connected(), std::nullopt};

    for (int iter = 1; iter <= max_iters; ++iter) {
        // Synchronous sweep: all implications are computed from the previous
        // sweep's values, so the result is independent of pair order.
        PairTable next = state;
        std::vector<Conflict> conflicts;
        double change = 0.0;

        for (int b = 0; b < n; ++b) {
            for (int c = b + 1; c < n; ++c) {
                const PairState& cur = state.at(b, c);
                Interval acc = cur.iv;
                for (int a = 0; a < n; ++a) {
                    if (a == b || a == c) continue;
                    const Interval implied = triangle_interval_lifted(
                        state.at(a, b).iv, state.at(a, c).iv, model);
                    const auto merged = intersect(acc, implied);
                    if (!merged) {
                        conflicts.push_back({a, b, c, implied, acc});
                        continue;
                    }
                    if (!cur.measured) acc = *merged;
                }
                if (!cur.measured) {
                    change = std::max(change, std::abs(acc.lo() - cur.iv.lo()));
                    change = std::max(change, std::abs(acc.hi() - cur.iv.hi()));
                    next.at(b, c).iv = acc;
                }
            }
        }

        if (!conflicts.empty()) {
            const auto worst = std::min_element(
                conflicts.begin(), conflicts.end(),
                [](const Conflict& l, const Conflict& r) { return l.before(r); });
            out.infeasible_witness = InfeasibilityWitness{
                worst->b, worst->c, worst->hub, worst->implied, worst->existing};
            break;
        }

        state = std::move(next);
        out.iterations = iter;
        if (change <= change_tol) {
            out.converged = true;
            break;
        }
    }

    // Assemble the completed graph: measured edges verbatim, everything else
    // as inferred ranges from the final (or last consistent) state.
    std::vector<EdgeRecord> edges;
    edges.reserve(static_cast<size_t>(n) * (n - 1) / 2);
    for (const EdgeRecord& e : g.edges()) edges.push_back(e);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (state.at(i, j).measured) continue;
            const Interval& iv = state.at(i, j).iv;
            edges.push_back({i, j, OverlapValue::range(iv.lo(), iv.hi()), Provenance::Inferred});
        }
    }
    out.complete = OverlapGraph(n, std::move(edges));
    return out;
}

std::map<std::pair<int, int>, double> classical_lower_map(const OverlapGraph& g) {
    require_valid(g, "classical_lower_map");
    const int n = g.vertex_count();
    const double inf = std::numeric_limits<double>::infinity();

    // All-pairs shortest paths under w = 1 - r over the measured edges.
    std::vector<std::vector<double>> dist(n, std::vector<double>(n, inf));
    for (int i = 0; i < n; ++i) dist[i][i] = 0.0;
    for (const EdgeRecord& e : g.edges()) {
        if (e.provenance != Provenance::Measured) continue;
        const double w = 1.0 - e.value.interval().lo();
        dist[e.i][e.j] = std::min(dist[e.i][e.j], w);
        dist[e.j][e.i] = dist[e.i][e.j];
    }
    for (int k = 0; k < n; ++k) {
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                if (dist[i][k] + dist[k][j] < dist[i][j]) {
                    dist[i][j] = dist[i][k] + dist[k][j];
                }
            }
        }
    }

    std::map<std::pair<int, int>, double> lower;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = dist[i][j];
            lower[{i, j}] = std::isfinite(d) ? std::max(0.0, 1.0 - d) : 0.0;
        }
    }
    return lower;
}

} // namespace obound
