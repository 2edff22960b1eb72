#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ncm/map.hpp"

namespace ncm {

/// A positioned parse diagnostic. Lines and columns are 1-based.
struct ParseError {
    std::size_t line = 1;
    std::size_t column = 1;
    std::string code;
    std::string message;
};

/// A successfully parsed map plus the source line of every statement, kept
/// so later validation diagnostics can point back into the file.
struct MapDocument {
    CognitiveMap map;
    std::string source;
    std::size_t map_line = 0;        // 0 when the statement is absent
    std::size_t threshold_line = 0;
    std::vector<std::size_t> concept_lines;  // parallel to map.concepts
    std::vector<std::size_t> edge_lines;     // parallel to map.edges
};

struct ParseResult {
    std::optional<MapDocument> document;  // engaged iff errors is empty
    std::vector<ParseError> errors;

    bool ok() const { return document.has_value(); }
};

/// Parses the line-oriented "ncm v1" format:
///
///   # comment
///   map "<name>"            (optional, once, before any other statement)
///   threshold <real>        (optional, once; default 0.5)
///   concept <id> "<label>" ["<description>"]
///   edge <from> <to> <weight>     weight: decimal in [-1,1], nonzero, or I
///
/// Never throws on malformed input; every offending line is reported.
/// Concepts may be referenced by edges declared on earlier lines.
ParseResult parse_map(std::string_view text);

/// Canonical rendering: map line, threshold line, concepts in declaration
/// order, edges sorted by (source index, target index). parse_map of the
/// result reproduces the map.
std::string serialize_map(const CognitiveMap& map);

namespace parse_code {
inline constexpr const char* kSyntax = "SYNTAX";
inline constexpr const char* kUnknownStatement = "UNKNOWN_STATEMENT";
inline constexpr const char* kUnterminatedString = "UNTERMINATED_STRING";
inline constexpr const char* kMapNotFirst = "MAP_NOT_FIRST";
inline constexpr const char* kDuplicateMap = "DUPLICATE_MAP";
inline constexpr const char* kDuplicateThreshold = "DUPLICATE_THRESHOLD";
inline constexpr const char* kBadNumber = "BAD_NUMBER";
inline constexpr const char* kBadIdentifier = "BAD_IDENTIFIER";
inline constexpr const char* kEmptyLabel = "EMPTY_LABEL";
inline constexpr const char* kDuplicateConcept = "DUPLICATE_CONCEPT";
inline constexpr const char* kUnknownConcept = "UNKNOWN_CONCEPT";
inline constexpr const char* kBadWeight = "BAD_WEIGHT";
inline constexpr const char* kWeightRange = "WEIGHT_RANGE";
inline constexpr const char* kWeightZero = "WEIGHT_ZERO";
inline constexpr const char* kSelfLoop = "SELF_LOOP";
inline constexpr const char* kDuplicateEdge = "DUPLICATE_EDGE";
}  // namespace parse_code

}  // namespace ncm
