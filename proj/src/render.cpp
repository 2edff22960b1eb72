#include "ncm/render.hpp"

#include <algorithm>

#include "ncm/errors.hpp"

namespace ncm {

namespace {

std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string cell_text(NeutroValue v) {
    if (v.is_zero()) return "0";
    if (v == kIndeterminate) return "I";
    return to_string(v);
}

}  // namespace

std::string export_dot(const CognitiveMap& map) {
    if (map.concepts.empty() && map.edges.empty())
        return "digraph " + dot_quote(map.name) + " { }\n";

    std::string out = "digraph " + dot_quote(map.name) + " {\n";
    for (const Concept& c : map.concepts)
        out += "  " + dot_quote(c.id) + " [label=" + dot_quote(c.label) + "];\n";

    std::vector<const Edge*> ordered;
    ordered.reserve(map.edges.size());
    for (const Edge& e : map.edges) ordered.push_back(&e);
    std::sort(ordered.begin(), ordered.end(), [&](const Edge* a, const Edge* b) {
        auto ka = std::pair(map.find_concept(a->from).value_or(map.concepts.size()),
                            map.find_concept(a->to).value_or(map.concepts.size()));
        auto kb = std::pair(map.find_concept(b->from).value_or(map.concepts.size()),
                            map.find_concept(b->to).value_or(map.concepts.size()));
        return ka < kb;
    });
    for (const Edge* e : ordered) {
        out += "  " + dot_quote(e->from) + " -> " + dot_quote(e->to);
        if (e->weight == kIndeterminate)
            out += " [label=\"I\", style=dotted];\n";
        else
            out += " [label=" + dot_quote(format_real(e->weight.det)) + "];\n";
    }
    out += "}\n";
    return out;
}

std::string render_matrix(const AdjacencyMatrix& matrix,
                          const std::vector<std::string>& concept_ids) {
    if (concept_ids.size() != matrix.n)
        throw DimensionMismatch("concept id list does not match matrix size");

    std::vector<std::vector<std::string>> cells(matrix.n, std::vector<std::string>(matrix.n));
    std::vector<std::size_t> widths(matrix.n);
    for (std::size_t j = 0; j < matrix.n; ++j) widths[j] = concept_ids[j].size();
    std::size_t header_width = 0;
    for (std::size_t i = 0; i < matrix.n; ++i) {
        header_width = std::max(header_width, concept_ids[i].size());
        for (std::size_t j = 0; j < matrix.n; ++j) {
            cells[i][j] = cell_text(matrix.at(i, j));
            widths[j] = std::max(widths[j], cells[i][j].size());
        }
    }

    auto pad_left = [](const std::string& s, std::size_t w) {
        return std::string(w - s.size(), ' ') + s;
    };

    std::string out(header_width, ' ');
    for (std::size_t j = 0; j < matrix.n; ++j) out += "  " + pad_left(concept_ids[j], widths[j]);
    out += "\n";
    for (std::size_t i = 0; i < matrix.n; ++i) {
        out += pad_left(concept_ids[i], header_width);
        for (std::size_t j = 0; j < matrix.n; ++j) out += "  " + pad_left(cells[i][j], widths[j]);
        out += "\n";
    }
    return out;
}

}  // namespace ncm
