#include "ncm/map.hpp"

#include <cmath>
#include <set>
#include <utility>

#include "ncm/errors.hpp"

namespace ncm {

std::optional<std::size_t> CognitiveMap::find_concept(std::string_view id) const {
    for (std::size_t i = 0; i < concepts.size(); ++i)
        if (concepts[i].id == id) return i;
    return std::nullopt;
}

bool is_valid_identifier(std::string_view id) {
    if (id.empty()) return false;
    auto head = [](char c) {
        return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || c == '_';
    };
    auto tail = [&](char c) { return head(c) || (c >= '0' && c <= '9'); };
    if (!head(id.front())) return false;
    for (char c : id.substr(1))
        if (!tail(c)) return false;
    return true;
}

bool is_legal_edge_weight(NeutroValue w) {
    if (w == kIndeterminate) return true;
    return w.ind == 0.0 && std::isfinite(w.det) && w.det >= -1.0 && w.det <= 1.0 &&
           w.det != 0.0;
}

static std::string edge_location(const Edge& e) {
    return "edge " + e.from + " -> " + e.to;
}

std::vector<Diagnostic> validate(const CognitiveMap& map) {
    std::vector<Diagnostic> out;
    auto error = [&](const char* code, std::string loc, std::string msg) {
        out.push_back({Severity::Error, code, std::move(loc), std::move(msg)});
    };

    std::set<std::string_view> ids;
    for (const Concept& c : map.concepts) {
        if (!is_valid_identifier(c.id))
            error(diag::kBadIdentifier, "concept " + c.id, "invalid concept id");
        if (!ids.insert(c.id).second)
            error(diag::kDuplicateConcept, "concept " + c.id, "concept declared twice");
        if (c.label.empty())
            error(diag::kEmptyLabel, "concept " + c.id, "concept label must be non-empty");
    }

    if (!std::isfinite(map.default_threshold))
        error(diag::kBadThreshold, "map " + map.name, "threshold must be finite");

    std::set<std::pair<std::string_view, std::string_view>> seen_pairs;
    for (const Edge& e : map.edges) {
        bool endpoints_ok = true;
        for (const std::string* end : {&e.from, &e.to}) {
            if (!ids.count(*end)) {
                error(diag::kUnknownConcept, edge_location(e),
                      "edge endpoint '" + *end + "' is not a declared concept");
                endpoints_ok = false;
            }
        }
        if (e.from == e.to)
            error(diag::kSelfLoop, edge_location(e), "self-loops are not allowed");
        if (e.weight.is_zero())
            error(diag::kWeightZero, edge_location(e),
                  "zero weight denotes the absence of an edge");
        else if (!is_legal_edge_weight(e.weight))
            error(diag::kWeightRange, edge_location(e),
                  "edge weight must be a real in [-1, 1] or I");
        if (endpoints_ok && !seen_pairs.insert({e.from, e.to}).second)
            error(diag::kDuplicateEdge, edge_location(e),
                  "only one edge per ordered concept pair");
    }

    for (const Concept& c : map.concepts) {
        bool touched = false;
        for (const Edge& e : map.edges)
            if (e.from == c.id || e.to == c.id) {
                touched = true;
                break;
            }
        if (!touched)
            out.push_back({Severity::Warning, diag::kIsolatedConcept, "concept " + c.id,
                           "concept has no incoming or outgoing edges"});
    }
    return out;
}

AdjacencyMatrix build_adjacency(const CognitiveMap& map) {
    auto diags = validate(map);
    if (has_errors(diags)) {
        for (const auto& d : diags)
            if (d.severity == Severity::Error)
                throw ValidationFailed(d.location + ": " + d.message + " [" + d.code + "]");
    }
    AdjacencyMatrix m(map.concepts.size());
    for (const Edge& e : map.edges) {
        std::size_t i = *map.find_concept(e.from);
        std::size_t j = *map.find_concept(e.to);
        m.at(i, j) = e.weight;
    }
    return m;
}

std::size_t concept_index(const CognitiveMap& map, std::string_view id) {
    if (auto i = map.find_concept(id)) return *i;
    throw UnknownConcept(std::string(id));
}

}  // namespace ncm
