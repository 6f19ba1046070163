#ifndef OBOUND_GRAPH_IO_HPP
#define OBOUND_GRAPH_IO_HPP

#include "obound/overlap_graph.hpp"
#include "obound/propagation.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

// Text formats for overlap graphs: a JSON document (the canonical on-disk
// form), CSV for tabular consumers, and DOT for rendering.
namespace obound::io {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// The on-disk graph model. Unknown document fields are kept as warnings,
/// never errors, so files written by newer tools stay readable.
struct GraphDocument {
    int n = 0;
    std::vector<std::string> labels;              // optional; size n when present
    std::vector<EdgeRecord> edges;
    std::map<std::string, std::string> metadata;  // free-form
    std::optional<InfeasibilityWitness> infeasible;

    std::vector<std::string> warnings; // parser notes; not serialized
};

/// Parses the JSON document form. Exact values are numbers, ranges are
/// two-element arrays; provenance defaults to "measured". Throws ParseError
/// with a field/position diagnostic on malformed input.
GraphDocument parse_graph_document(const std::string& text);

/// Serializes back to JSON. Numbers round-trip to the identical double.
std::string to_json(const GraphDocument& doc);

/// CSV with the fixed header i,j,lo,hi,provenance.
std::string to_csv(const GraphDocument& doc);

/// Graphviz export: measured edges solid, inferred edges dashed with the
/// interval as the label.
std::string to_dot(const GraphDocument& doc);

/// Builds the graph value; throws ParseError when the document does not
/// describe a valid graph (the message lists every validation issue).
OverlapGraph to_overlap_graph(const GraphDocument& doc);

GraphDocument document_from_graph(const OverlapGraph& g,
                                  std::vector<std::string> labels = {});

/// Document for a finished inference run: the complete graph plus
/// convergence metadata and, when present, the infeasibility witness.
GraphDocument document_from_inference(const InferenceResult& result,
                                      std::vector<std::string> labels = {});

/// Vertex display name: the label when provided, else the index.
std::string vertex_name(const GraphDocument& doc, int v);

} // namespace obound::io

#endif // OBOUND_GRAPH_IO_HPP
