#include "ncm/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdint>
#include <map>
#include <set>
#include <utility>

namespace ncm {

namespace {

struct Token {
    std::string text;
    std::size_t column = 1;  // 1-based start column
    bool quoted = false;
};

struct Line {
    std::size_t number = 1;
    std::vector<Token> tokens;
};

class ErrorSink {
public:
    explicit ErrorSink(std::vector<ParseError>& out) : out_(out) {}
    void add(std::size_t line, std::size_t col, const char* code, std::string msg) {
        out_.push_back({line, col, code, std::move(msg)});
    }

private:
    std::vector<ParseError>& out_;
};

// Splits one source line into whitespace-separated tokens; double-quoted
// strings may contain spaces and the escapes \" and \\. '#' outside quotes
// starts a comment. Returns false when the line cannot be tokenized.
bool tokenize_line(std::string_view text, std::size_t line_no, std::vector<Token>& tokens,
                   ErrorSink& errors) {
    std::size_t i = 0;
    bool ok = true;
    while (i < text.size()) {
        char c = text[i];
        if (c == ' ' || c == '\t') {
            ++i;
            continue;
        }
        if (c == '#') break;
        std::size_t start = i;
        if (c == '"') {
            std::string value;
            ++i;
            bool closed = false;
            while (i < text.size()) {
                char q = text[i];
                if (q == '\\') {
                    if (i + 1 < text.size() && (text[i + 1] == '"' || text[i + 1] == '\\')) {
                        value.push_back(text[i + 1]);
                        i += 2;
                        continue;
                    }
                    errors.add(line_no, i + 1, parse_code::kSyntax,
                               "invalid escape sequence in string");
                    ok = false;
                    ++i;
                    continue;
                }
                if (q == '"') {
                    closed = true;
                    ++i;
                    break;
                }
                value.push_back(q);
                ++i;
            }
            if (!closed) {
                errors.add(line_no, start + 1, parse_code::kUnterminatedString,
                           "string literal is not closed");
                return false;
            }
            tokens.push_back({std::move(value), start + 1, true});
            continue;
        }
        while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '#' &&
               text[i] != '"')
            ++i;
        tokens.push_back({std::string(text.substr(start, i - start)), start + 1, false});
    }
    return ok;
}

// Strict decimal: optional sign, digits with an optional fraction of at most
// nine digits. No exponents, no hex, no inf/nan.
std::optional<double> parse_decimal(std::string_view s, std::string& why) {
    std::string_view rest = s;
    if (!rest.empty() && (rest.front() == '+' || rest.front() == '-')) rest.remove_prefix(1);
    if (rest.empty()) {
        why = "not a decimal number";
        return std::nullopt;
    }
    auto digits = [](std::string_view v) {
        return !v.empty() && std::all_of(v.begin(), v.end(), [](unsigned char c) {
            return std::isdigit(c) != 0;
        });
    };
    auto dot = rest.find('.');
    std::string_view whole = rest.substr(0, dot);
    std::string_view frac = dot == std::string_view::npos ? std::string_view{} : rest.substr(dot + 1);
    if (dot != std::string_view::npos && frac.empty()) {
        why = "not a decimal number";
        return std::nullopt;
    }
    bool whole_ok = digits(whole) || (whole.empty() && dot != std::string_view::npos);
    bool frac_ok = dot == std::string_view::npos || digits(frac);
    if (!whole_ok || !frac_ok) {
        why = "not a decimal number";
        return std::nullopt;
    }
    if (frac.size() > 9) {
        why = "at most 9 fractional digits are accepted";
        return std::nullopt;
    }
    std::string buf = rest.front() == '.' ? "0" + std::string(rest) : std::string(rest);
    double magnitude = 0.0;
    auto [ptr, ec] = std::from_chars(buf.data(), buf.data() + buf.size(), magnitude);
    if (ec != std::errc{} || ptr != buf.data() + buf.size()) {
        why = "not a decimal number";
        return std::nullopt;
    }
    return s.front() == '-' ? -magnitude : magnitude;
}

std::string quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

std::string render_weight(NeutroValue w) {
    return w == kIndeterminate ? "I" : format_real(w.det);
}

}  // namespace

ParseResult parse_map(std::string_view text) {
    ParseResult result;
    ErrorSink errors(result.errors);

    std::vector<Line> lines;
    {
        std::size_t line_no = 1;
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto nl = text.find('\n', pos);
            std::string_view raw = text.substr(pos, nl == std::string_view::npos
                                                        ? text.size() - pos
                                                        : nl - pos);
            if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
            Line line{line_no, {}};
            if (tokenize_line(raw, line_no, line.tokens, errors) && !line.tokens.empty())
                lines.push_back(std::move(line));
            if (nl == std::string_view::npos) break;
            pos = nl + 1;
            ++line_no;
        }
    }

    MapDocument doc;
    doc.source.assign(text);
    doc.map.default_threshold = 0.5;

    auto end_col = [](const Line& line) {
        const Token& last = line.tokens.back();
        return last.column + last.text.size() + (last.quoted ? 2 : 0);
    };
    auto require_arity = [&](const Line& line, std::size_t count, const char* shape) {
        if (line.tokens.size() == count) return true;
        if (line.tokens.size() < count)
            errors.add(line.number, end_col(line), parse_code::kSyntax,
                       std::string("expected ") + shape);
        else
            errors.add(line.number, line.tokens[count].column, parse_code::kSyntax,
                       std::string("unexpected trailing tokens; expected ") + shape);
        return false;
    };

    // Concepts and map-level statements first; edges may reference concepts
    // declared on any line.
    std::map<std::string, std::size_t, std::less<>> concept_ids;
    std::size_t statements_seen = 0;
    bool map_seen = false;
    bool threshold_seen = false;

    for (const Line& line : lines) {
        const Token& head = line.tokens.front();
        ++statements_seen;
        if (head.quoted) {
            errors.add(line.number, head.column, parse_code::kUnknownStatement,
                       "statement must start with map, threshold, concept, or edge");
            continue;
        }
        if (head.text == "map") {
            if (map_seen) {
                errors.add(line.number, head.column, parse_code::kDuplicateMap,
                           "map statement appears twice");
                continue;
            }
            map_seen = true;
            if (statements_seen != 1) {
                errors.add(line.number, head.column, parse_code::kMapNotFirst,
                           "map statement must come before any other statement");
                continue;
            }
            if (!require_arity(line, 2, "map \"<name>\"")) continue;
            if (!line.tokens[1].quoted) {
                errors.add(line.number, line.tokens[1].column, parse_code::kSyntax,
                           "map name must be a quoted string");
                continue;
            }
            doc.map.name = line.tokens[1].text;
            doc.map_line = line.number;
        } else if (head.text == "threshold") {
            if (threshold_seen) {
                errors.add(line.number, head.column, parse_code::kDuplicateThreshold,
                           "threshold statement appears twice");
                continue;
            }
            threshold_seen = true;
            if (!require_arity(line, 2, "threshold <real>")) continue;
            std::string why;
            auto value = parse_decimal(line.tokens[1].text, why);
            if (!value || line.tokens[1].quoted) {
                errors.add(line.number, line.tokens[1].column, parse_code::kBadNumber,
                           why.empty() ? "not a decimal number" : why);
                continue;
            }
            doc.map.default_threshold = *value;
            doc.threshold_line = line.number;
        } else if (head.text == "concept") {
            if (line.tokens.size() != 3 && line.tokens.size() != 4) {
                require_arity(line, 3, "concept <id> \"<label>\"");
                continue;
            }
            const Token& id = line.tokens[1];
            const Token& label = line.tokens[2];
            bool bad = false;
            if (id.quoted || !is_valid_identifier(id.text)) {
                errors.add(line.number, id.column, parse_code::kBadIdentifier,
                           "concept id must match [A-Za-z_][A-Za-z0-9_]*");
                bad = true;
            }
            if (!label.quoted) {
                errors.add(line.number, label.column, parse_code::kSyntax,
                           "concept label must be a quoted string");
                bad = true;
            } else if (label.text.empty()) {
                errors.add(line.number, label.column, parse_code::kEmptyLabel,
                           "concept label must be non-empty");
                bad = true;
            }
            std::string description;
            if (line.tokens.size() == 4) {
                if (!line.tokens[3].quoted) {
                    errors.add(line.number, line.tokens[3].column, parse_code::kSyntax,
                               "concept description must be a quoted string");
                    bad = true;
                } else {
                    description = line.tokens[3].text;
                }
            }
            if (concept_ids.count(id.text)) {
                errors.add(line.number, id.column, parse_code::kDuplicateConcept,
                           "concept '" + id.text + "' is already declared");
                continue;
            }
            if (bad) {
                // register the id anyway so edges naming it do not cascade
                concept_ids.emplace(id.text, SIZE_MAX);
                continue;
            }
            concept_ids.emplace(id.text, doc.map.concepts.size());
            doc.map.concepts.push_back({id.text, label.text, description});
            doc.concept_lines.push_back(line.number);
        } else if (head.text == "edge") {
            // second pass
        } else {
            errors.add(line.number, head.column, parse_code::kUnknownStatement,
                       "unknown statement '" + head.text + "'");
        }
    }

    std::set<std::pair<std::string, std::string>> edge_pairs;
    for (const Line& line : lines) {
        if (line.tokens.front().quoted || line.tokens.front().text != "edge") continue;
        if (!require_arity(line, 4, "edge <from> <to> <weight>")) continue;
        const Token& from = line.tokens[1];
        const Token& to = line.tokens[2];
        const Token& weight = line.tokens[3];
        bool bad = false;
        for (const Token* end : {&from, &to}) {
            if (end->quoted || !concept_ids.count(end->text)) {
                errors.add(line.number, end->column, parse_code::kUnknownConcept,
                           "edge endpoint '" + end->text + "' is not a declared concept");
                bad = true;
            }
        }
        NeutroValue w;
        if (weight.quoted) {
            errors.add(line.number, weight.column, parse_code::kBadWeight,
                       "edge weight must be a decimal in [-1, 1] or the literal I");
            bad = true;
        } else if (weight.text == "I") {
            w = kIndeterminate;
        } else {
            std::string why;
            auto value = parse_decimal(weight.text, why);
            if (!value) {
                errors.add(line.number, weight.column, parse_code::kBadWeight,
                           why == "not a decimal number"
                               ? "edge weight must be a decimal in [-1, 1] or the literal I"
                               : why);
                bad = true;
            } else if (*value < -1.0 || *value > 1.0) {
                errors.add(line.number, weight.column, parse_code::kWeightRange,
                           "edge weight must lie in [-1, 1]");
                bad = true;
            } else if (*value == 0.0) {
                errors.add(line.number, weight.column, parse_code::kWeightZero,
                           "zero weight denotes the absence of an edge; remove the line");
                bad = true;
            } else {
                w = NeutroValue{*value, 0.0};
            }
        }
        if (!bad && from.text == to.text) {
            errors.add(line.number, from.column, parse_code::kSelfLoop,
                       "self-loops are not allowed");
            bad = true;
        }
        if (!bad && !edge_pairs.insert({from.text, to.text}).second) {
            errors.add(line.number, from.column, parse_code::kDuplicateEdge,
                       "edge " + from.text + " -> " + to.text + " is already declared");
            bad = true;
        }
        if (bad) continue;
        doc.map.edges.push_back({from.text, to.text, w});
        doc.edge_lines.push_back(line.number);
    }

    if (result.errors.empty()) {
        result.document = std::move(doc);
    } else {
        std::stable_sort(result.errors.begin(), result.errors.end(),
                         [](const ParseError& a, const ParseError& b) {
                             return std::pair(a.line, a.column) < std::pair(b.line, b.column);
                         });
    }
    return result;
}

std::string serialize_map(const CognitiveMap& map) {
    std::string out;
    out += "map " + quote(map.name) + "\n";
    out += "threshold " + format_real(map.default_threshold) + "\n";
    for (const Concept& c : map.concepts) {
        out += "concept " + c.id + " " + quote(c.label);
        if (!c.description.empty()) out += " " + quote(c.description);
        out += "\n";
    }
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
    for (const Edge* e : ordered)
        out += "edge " + e->from + " " + e->to + " " + render_weight(e->weight) + "\n";
    return out;
}

}  // namespace ncm
