#include "obound/graph_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace obound::io {

namespace {

using nlohmann::json;

// Known top-level and per-edge field names; anything else is a warning.
const char* const kTopFields[] = {"n", "labels", "edges", "metadata", "infeasible"};
const char* const kEdgeFields[] = {"i", "j", "value", "provenance"};

bool known_field(const std::string& key, const char* const* names, size_t count) {
    for (size_t i = 0; i < count; ++i) {
        if (key == names[i]) return true;
    }
    return false;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw ParseError(where + ": " + what);
}

int require_int(const json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<int>();
}

double require_number(const json& j, const std::string& where) {
    if (!j.is_number()) fail(where, "expected a number");
    return j.get<double>();
}

OverlapValue parse_value(const json& j, const std::string& where) {
    if (j.is_number()) {
        return OverlapValue::exact_value(j.get<double>());
    }
    if (j.is_array()) {
        if (j.size() != 2) fail(where, "a range must be a two-element array [lo, hi]");
        return OverlapValue::range(require_number(j[0], where + "[0]"),
                                   require_number(j[1], where + "[1]"));
    }
    fail(where, "expected a number or a [lo, hi] array");
}

Provenance parse_provenance(const json& j, const std::string& where) {
    if (!j.is_string()) fail(where, "expected \"measured\" or \"inferred\"");
    const std::string s = j.get<std::string>();
    if (s == "measured") return Provenance::Measured;
    if (s == "inferred") return Provenance::Inferred;
    fail(where, "unknown provenance \"" + s + "\"");
}

json value_to_json(const OverlapValue& v) {
    if (v.exact) return v.lo;
    return json::array({v.lo, v.hi});
}

std::string format_number(double v) {
    // Shortest representation that still survives a round-trip; DOT and CSV
    // share it with the JSON writer's own doubles.
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    double back = 0.0;
    std::sscanf(buf, "%lg", &back);
    if (back == v) {
        for (int prec = 1; prec < 17; ++prec) {
            char shorter[32];
            std::snprintf(shorter, sizeof(shorter), "%.*g", prec, v);
            std::sscanf(shorter, "%lg", &back);
            if (back == v) return shorter;
        }
    }
    return buf;
}

} // namespace

GraphDocument parse_graph_document(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) fail("document", "top level must be an object");

    GraphDocument doc;
    if (!root.contains("n")) fail("document", "missing required field \"n\"");
    doc.n = require_int(root["n"], "n");

    if (root.contains("labels")) {
        const json& labels = root["labels"];
        if (!labels.is_array()) fail("labels", "expected an array of strings");
        for (size_t i = 0; i < labels.size(); ++i) {
            if (!labels[i].is_string()) fail("labels[" + std::to_string(i) + "]", "expected a string");
            doc.labels.push_back(labels[i].get<std::string>());
        }
        if (static_cast<int>(doc.labels.size()) != doc.n) {
            fail("labels", "expected " + std::to_string(doc.n) + " entries, got " +
                               std::to_string(doc.labels.size()));
        }
    }

    if (root.contains("edges")) {
        const json& edges = root["edges"];
        if (!edges.is_array()) fail("edges", "expected an array");
        for (size_t idx = 0; idx < edges.size(); ++idx) {
            const std::string where = "edges[" + std::to_string(idx) + "]";
            const json& e = edges[idx];
            if (!e.is_object()) fail(where, "expected an object");
            if (!e.contains("i") || !e.contains("j") || !e.contains("value")) {
                fail(where, "an edge needs fields i, j and value");
            }
            EdgeRecord record;
            record.i = require_int(e["i"], where + ".i");
            record.j = require_int(e["j"], where + ".j");
            record.value = parse_value(e["value"], where + ".value");
            record.provenance = e.contains("provenance")
                                    ? parse_provenance(e["provenance"], where + ".provenance")
                                    : Provenance::Measured;
            doc.edges.push_back(record);
            for (const auto& [key, _] : e.items()) {
                if (!known_field(key, kEdgeFields, std::size(kEdgeFields))) {
                    doc.warnings.push_back("ignored unknown field \"" + key + "\" in " + where);
                }
            }
        }
    }

    if (root.contains("metadata")) {
        const json& meta = root["metadata"];
        if (!meta.is_object()) fail("metadata", "expected an object");
        for (const auto& [key, value] : meta.items()) {
            doc.metadata[key] = value.is_string() ? value.get<std::string>() : value.dump();
        }
    }

    if (root.contains("infeasible")) {
        const json& w = root["infeasible"];
        if (!w.is_object()) fail("infeasible", "expected an object");
        InfeasibilityWitness witness;
        witness.b = require_int(w.value("pair", json::array({-1, -1}))[0], "infeasible.pair[0]");
        witness.c = require_int(w.value("pair", json::array({-1, -1}))[1], "infeasible.pair[1]");
        witness.common_neighbor = require_int(w.value("common_neighbor", json(-1)),
                                              "infeasible.common_neighbor");
        if (w.contains("implied")) {
            witness.implied = Interval(require_number(w["implied"][0], "infeasible.implied[0]"),
                                       require_number(w["implied"][1], "infeasible.implied[1]"));
        }
        if (w.contains("existing")) {
            witness.existing = Interval(require_number(w["existing"][0], "infeasible.existing[0]"),
                                        require_number(w["existing"][1], "infeasible.existing[1]"));
        }
        doc.infeasible = witness;
    }

    for (const auto& [key, _] : root.items()) {
        if (!known_field(key, kTopFields, std::size(kTopFields))) {
            doc.warnings.push_back("ignored unknown field \"" + key + "\"");
        }
    }
    return doc;
}

std::string to_json(const GraphDocument& doc) {
    json root;
    root["n"] = doc.n;
    if (!doc.labels.empty()) root["labels"] = doc.labels;
    json edges = json::array();
    for (const EdgeRecord& e : doc.edges) {
        json edge;
        edge["i"] = e.i;
        edge["j"] = e.j;
        edge["value"] = value_to_json(e.value);
        edge["provenance"] = to_string(e.provenance);
        edges.push_back(std::move(edge));
    }
    root["edges"] = std::move(edges);
    if (!doc.metadata.empty()) root["metadata"] = doc.metadata;
    if (doc.infeasible) {
        const InfeasibilityWitness& w = *doc.infeasible;
        root["infeasible"] = {
            {"pair", {w.b, w.c}},
            {"common_neighbor", w.common_neighbor},
            {"implied", {w.implied.lo(), w.implied.hi()}},
            {"existing", {w.existing.lo(), w.existing.hi()}},
        };
    }
    return root.dump(2) + "\n";
}

std::string to_csv(const GraphDocument& doc) {
    std::ostringstream out;
    out << "i,j,lo,hi,provenance\n";
    for (const EdgeRecord& e : doc.edges) {
        out << e.i << ',' << e.j << ',' << format_number(e.value.lo) << ','
            << format_number(e.value.hi) << ',' << to_string(e.provenance) << '\n';
    }
    return out.str();
}

std::string to_dot(const GraphDocument& doc) {
    std::ostringstream out;
    out << "graph overlaps {\n";
    for (int v = 0; v < doc.n; ++v) {
        out << "  " << v << " [label=\"" << vertex_name(doc, v) << "\"];\n";
    }
    for (const EdgeRecord& e : doc.edges) {
        out << "  " << e.i << " -- " << e.j;
        if (e.provenance == Provenance::Measured) {
            out << " [style=solid, label=\"";
        } else {
            out << " [style=dashed, label=\"";
        }
        if (e.value.exact || e.value.lo == e.value.hi) {
            out << format_number(e.value.lo);
        } else {
            out << '[' << format_number(e.value.lo) << ", " << format_number(e.value.hi) << ']';
        }
        out << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

OverlapGraph to_overlap_graph(const GraphDocument& doc) {
    if (doc.n < 2) throw ParseError("n: a graph needs at least 2 vertices");
    OverlapGraph g(doc.n, doc.edges);
    const ValidationReport report = validate_graph(g);
    if (!report.ok()) {
        std::ostringstream msg;
        msg << "graph validation failed:";
        for (const GraphIssue& issue : report.issues) {
            msg << "\n  [" << to_string(issue.kind) << "] edge {" << issue.i << ", " << issue.j
                << "}: " << issue.detail;
        }
        throw ParseError(msg.str());
    }
    return g;
}

GraphDocument document_from_graph(const OverlapGraph& g, std::vector<std::string> labels) {
    GraphDocument doc;
    doc.n = g.vertex_count();
    doc.labels = std::move(labels);
    doc.edges = g.edges();
    std::sort(doc.edges.begin(), doc.edges.end(), [](const EdgeRecord& a, const EdgeRecord& b) {
        const auto ka = std::minmax(a.i, a.j);
        const auto kb = std::minmax(b.i, b.j);
        return ka < kb;
    });
    return doc;
}

GraphDocument document_from_inference(const InferenceResult& result,
                                      std::vector<std::string> labels) {
    GraphDocument doc = document_from_graph(result.complete, std::move(labels));
    doc.metadata["converged"] = result.converged ? "true" : "false";
    doc.metadata["iterations"] = std::to_string(result.iterations);
    doc.metadata["connected"] = result.input_connected ? "true" : "false";
    doc.infeasible = result.infeasible_witness;
    return doc;
}

std::string vertex_name(const GraphDocument& doc, int v) {
    if (v >= 0 && v < static_cast<int>(doc.labels.size())) return doc.labels[v];
    return std::to_string(v);
}

} // namespace obound::io
