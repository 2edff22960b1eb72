#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncm/neutro.hpp"

namespace ncm {

/// One mapped concept. Declaration order inside a CognitiveMap fixes the
/// matrix/vector index of the concept.
struct Concept {
    std::string id;           // [A-Za-z_][A-Za-z0-9_]*, unique within a map
    std::string label;        // non-empty, human readable
    std::string description;  // optional
};

/// A directed causal connection. The weight is either a pure real in
/// [-1, 1] \ {0} or exactly I (zero weight means "no edge").
struct Edge {
    std::string from;
    std::string to;
    NeutroValue weight;
};

struct CognitiveMap {
    std::string name;
    std::vector<Concept> concepts;  // declaration order = index
    std::vector<Edge> edges;
    double default_threshold = 0.5;

    std::optional<std::size_t> find_concept(std::string_view id) const;
};

enum class Severity { Error, Warning };

struct Diagnostic {
    Severity severity = Severity::Error;
    std::string code;      // stable identifier, e.g. "SELF_LOOP"
    std::string location;  // offending concept or edge
    std::string message;
};

namespace diag {
inline constexpr const char* kBadIdentifier = "BAD_IDENTIFIER";
inline constexpr const char* kDuplicateConcept = "DUPLICATE_CONCEPT";
inline constexpr const char* kEmptyLabel = "EMPTY_LABEL";
inline constexpr const char* kBadThreshold = "BAD_THRESHOLD";
inline constexpr const char* kUnknownConcept = "UNKNOWN_CONCEPT";
inline constexpr const char* kSelfLoop = "SELF_LOOP";
inline constexpr const char* kWeightRange = "WEIGHT_RANGE";
inline constexpr const char* kWeightZero = "WEIGHT_ZERO";
inline constexpr const char* kDuplicateEdge = "DUPLICATE_EDGE";
inline constexpr const char* kIsolatedConcept = "ISOLATED_CONCEPT";
}  // namespace diag

/// Row-major square matrix of neutrosophic weights, row = source concept,
/// column = target concept.
struct AdjacencyMatrix {
    std::size_t n = 0;
    std::vector<NeutroValue> cells;

    AdjacencyMatrix() = default;
    explicit AdjacencyMatrix(std::size_t size) : n(size), cells(size * size) {}

    NeutroValue& at(std::size_t row, std::size_t col) { return cells[row * n + col]; }
    const NeutroValue& at(std::size_t row, std::size_t col) const { return cells[row * n + col]; }
};

bool is_valid_identifier(std::string_view id);

/// True for weights an edge may legally carry: pure real in [-1, 1] and
/// nonzero, or exactly {0, 1}.
bool is_legal_edge_weight(NeutroValue w);

/// Checks every map invariant. Empty result means the map is valid; isolated
/// concepts (no incoming and no outgoing edge) produce warnings, everything
/// else errors. Diagnostic order is deterministic: concepts in declaration
/// order, then edges, then isolation warnings.
std::vector<Diagnostic> validate(const CognitiveMap& map);

inline bool has_errors(const std::vector<Diagnostic>& diags) {
    for (const auto& d : diags)
        if (d.severity == Severity::Error) return true;
    return false;
}

/// Builds N(E) from a valid map. Throws ValidationFailed otherwise.
AdjacencyMatrix build_adjacency(const CognitiveMap& map);

/// Zero-based declaration index of a concept. Throws UnknownConcept.
std::size_t concept_index(const CognitiveMap& map, std::string_view id);

}  // namespace ncm
