#include "obound/overlap_graph.hpp"

#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

namespace obound {

OverlapGraph::OverlapGraph(int vertex_count, std::vector<EdgeRecord> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
    if (n_ < 2) {
        throw std::invalid_argument("overlap graph needs at least 2 vertices, got " +
                                    std::to_string(n_));
    }
}

const EdgeRecord* OverlapGraph::find_edge(int i, int j) const {
    for (const EdgeRecord& e : edges_) {
        if ((e.i == i && e.j == j) || (e.i == j && e.j == i)) {
            return &e;
        }
    }
    return nullptr;
}

bool OverlapGraph::is_connected() const {
    // Union-find over edges with in-range endpoints.
    std::vector<int> parent(n_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (const EdgeRecord& e : edges_) {
        if (e.i < 0 || e.i >= n_ || e.j < 0 || e.j >= n_) continue;
        parent[find(e.i)] = find(e.j);
    }
    const int root = find(0);
    for (int v = 1; v < n_; ++v) {
        if (find(v) != root) return false;
    }
    return true;
}

ValidationReport validate_graph(const OverlapGraph& g) {
    ValidationReport report;
    const int n = g.vertex_count();
    std::set<std::pair<int, int>> seen;

    for (const EdgeRecord& e : g.edges()) {
        if (e.i < 0 || e.i >= n || e.j < 0 || e.j >= n) {
            report.issues.push_back({GraphIssue::Kind::BadVertexIndex, e.i, e.j,
                                     "vertex index outside [0, " + std::to_string(n) + ")"});
            continue;
        }
        if (e.i == e.j) {
            report.issues.push_back({GraphIssue::Kind::SelfLoop, e.i, e.j,
                                     "self-loop on vertex " + std::to_string(e.i)});
            continue;
        }
        const auto key = std::minmax(e.i, e.j);
        if (!seen.insert(key).second) {
            report.issues.push_back({GraphIssue::Kind::DuplicateEdge, key.first, key.second,
                                     "pair recorded more than once"});
        }
        const bool lo_ok = e.value.lo >= -kBoundarySlack && e.value.lo <= 1.0 + kBoundarySlack;
        const bool hi_ok = e.value.hi >= -kBoundarySlack && e.value.hi <= 1.0 + kBoundarySlack;
        const bool ordered = e.value.lo <= e.value.hi + kBoundarySlack;
        if (!lo_ok || !hi_ok || !ordered) {
            report.issues.push_back({GraphIssue::Kind::OutOfRangeWeight, key.first, key.second,
                                     "value [" + std::to_string(e.value.lo) + ", " +
                                         std::to_string(e.value.hi) + "] not a subrange of [0,1]"});
        }
    }
    return report;
}

} // namespace obound
