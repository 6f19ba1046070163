#ifndef OBOUND_OVERLAP_GRAPH_HPP
#define OBOUND_OVERLAP_GRAPH_HPP

#include "obound/interval.hpp"

#include <string>
#include <vector>

namespace obound {

/// Where an edge value came from. Measured values are never modified by
/// inference; they only act as constraints.
enum class Provenance { Measured, Inferred };

constexpr const char* to_string(Provenance p) {
    return p == Provenance::Measured ? "measured" : "inferred";
}

/// An overlap value: either an exact number or a closed range. Endpoints are
/// stored unchecked so that a graph built from raw input can be validated
/// after the fact; interval() applies the boundary snap and rejects the rest.
struct OverlapValue {
    double lo = 0.0;
    double hi = 0.0;
    bool exact = true;

    static OverlapValue exact_value(double v) { return {v, v, true}; }
    static OverlapValue range(double lo, double hi) { return {lo, hi, false}; }

    /// Throws std::invalid_argument when the stored endpoints are invalid.
    Interval interval() const { return Interval(lo, hi); }
};

/// One recorded edge {i,j} with its value and provenance. Vertex order is
/// kept as given; lookups treat the pair as unordered.
struct EdgeRecord {
    int i = 0;
    int j = 0;
    OverlapValue value;
    Provenance provenance = Provenance::Measured;
};

/// A weighted graph of pairwise overlaps between n >= 2 systems. The edge
/// list is immutable after construction; validity (ranges, self-loops,
/// duplicates, indices) is checked separately by validate_graph so that a
/// full error report can be produced for dirty input.
class OverlapGraph {
public:
    OverlapGraph(int vertex_count, std::vector<EdgeRecord> edges);

    int vertex_count() const { return n_; }
    const std::vector<EdgeRecord>& edges() const { return edges_; }

    /// First edge recorded for the unordered pair {i,j}, or nullptr.
    const EdgeRecord* find_edge(int i, int j) const;

    /// Connectivity over the recorded edges. Graphs may legitimately be
    /// disconnected; callers decide what that means.
    bool is_connected() const;

private:
    int n_;
    std::vector<EdgeRecord> edges_;
};

struct GraphIssue {
    enum class Kind { OutOfRangeWeight, SelfLoop, DuplicateEdge, BadVertexIndex };
    Kind kind;
    int i = -1;
    int j = -1;
    std::string detail;
};

constexpr const char* to_string(GraphIssue::Kind k) {
    switch (k) {
        case GraphIssue::Kind::OutOfRangeWeight: return "OutOfRangeWeight";
        case GraphIssue::Kind::SelfLoop: return "SelfLoop";
        case GraphIssue::Kind::DuplicateEdge: return "DuplicateEdge";
        case GraphIssue::Kind::BadVertexIndex: return "BadVertexIndex";
    }
    return "?";
}

struct ValidationReport {
    std::vector<GraphIssue> issues;
    bool ok() const { return issues.empty(); }
};

/// Checks every graph invariant and reports each violation with the
/// offending edge. A graph that passes can feed every algorithm in this
/// library without further checks.
ValidationReport validate_graph(const OverlapGraph& g);

} // namespace obound

#endif // OBOUND_OVERLAP_GRAPH_HPP
