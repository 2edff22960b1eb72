#include <doctest.h>

#include <algorithm>
#include <random>

#include "ncm/dsl.hpp"
#include "ncm/map.hpp"
#include "test_helpers.hpp"

using ncm::parse_map;
using ncm::serialize_map;

namespace {

bool has_error(const ncm::ParseResult& r, const char* code) {
    return std::any_of(r.errors.begin(), r.errors.end(),
                       [&](const ncm::ParseError& e) { return e.code == code; });
}

}  // namespace

TEST_CASE("the bundled asset parses into the nine-concept map") {
    auto parsed = parse_map(testutil::read_text(testutil::eis_path()));
    REQUIRE(parsed.ok());
    const ncm::CognitiveMap& map = parsed.document->map;
    CHECK(map.name == "EIS success");
    CHECK(map.default_threshold == 0.5);
    REQUIRE(map.concepts.size() == 9);
    CHECK(map.concepts[0].label == "Users' involvement");
    CHECK(map.edges.size() == 19);
}

TEST_CASE("a minimal indeterminate edge parses") {
    auto parsed = parse_map("concept a \"A\"\nconcept b \"B\"\nedge a b I\n");
    REQUIRE(parsed.ok());
    REQUIRE(parsed.document->map.edges.size() == 1);
    CHECK(parsed.document->map.edges[0].weight == ncm::kIndeterminate);
}

TEST_CASE("edges may reference concepts declared later in the file") {
    auto parsed = parse_map("edge a b 0.5\nconcept a \"A\"\nconcept b \"B\"\n");
    REQUIRE(parsed.ok());
    CHECK(parsed.document->map.edges.size() == 1);
}

TEST_CASE("an edge with undeclared endpoints is a positioned error") {
    auto parsed = parse_map("edge a b 0.5\n");
    REQUIRE(!parsed.ok());
    REQUIRE(!parsed.errors.empty());
    CHECK(has_error(parsed, ncm::parse_code::kUnknownConcept));
    CHECK(parsed.errors[0].line == 1);
    CHECK(parsed.errors[0].column == 6);
}

TEST_CASE("every malformed line is reported, not only the first") {
    auto parsed = parse_map(
        "concept a \"A\"\n"
        "concept a \"again\"\n"   // duplicate
        "edge a a 0.5\n"           // self-loop
        "edge a b 2\n"             // unknown endpoint and out-of-range weight
        "wibble\n");               // unknown statement
    REQUIRE(!parsed.ok());
    CHECK(has_error(parsed, ncm::parse_code::kDuplicateConcept));
    CHECK(has_error(parsed, ncm::parse_code::kSelfLoop));
    CHECK(has_error(parsed, ncm::parse_code::kUnknownConcept));
    CHECK(has_error(parsed, ncm::parse_code::kUnknownStatement));
    CHECK(parsed.errors.size() >= 4);
    // errors come out sorted by position
    for (std::size_t i = 1; i < parsed.errors.size(); ++i)
        CHECK(parsed.errors[i - 1].line <= parsed.errors[i].line);
}

TEST_CASE("weight literals are strict") {
    std::string head = "concept a \"A\"\nconcept b \"B\"\n";
    CHECK(has_error(parse_map(head + "edge a b i\n"), ncm::parse_code::kBadWeight));
    CHECK(has_error(parse_map(head + "edge a b 1.5\n"), ncm::parse_code::kWeightRange));
    CHECK(has_error(parse_map(head + "edge a b -1.5\n"), ncm::parse_code::kWeightRange));
    CHECK(has_error(parse_map(head + "edge a b 0\n"), ncm::parse_code::kWeightZero));
    CHECK(has_error(parse_map(head + "edge a b 0.0\n"), ncm::parse_code::kWeightZero));
    CHECK(has_error(parse_map(head + "edge a b 1e-1\n"), ncm::parse_code::kBadWeight));
    CHECK(has_error(parse_map(head + "edge a b nan\n"), ncm::parse_code::kBadWeight));
    CHECK(has_error(parse_map(head + "edge a b 0.1234567891\n"), ncm::parse_code::kBadWeight));
    CHECK(parse_map(head + "edge a b 0.123456789\n").ok());
    CHECK(parse_map(head + "edge a b -1\n").ok());
    CHECK(parse_map(head + "edge a b .5\n").ok());
    CHECK(parse_map(head + "edge a b +0.5\n").ok());
}

TEST_CASE("statement structure is checked") {
    CHECK(has_error(parse_map("concept a \"A\"\nmap \"late\"\n"), ncm::parse_code::kMapNotFirst));
    CHECK(has_error(parse_map("map \"a\"\nmap \"b\"\n"), ncm::parse_code::kDuplicateMap));
    CHECK(has_error(parse_map("threshold 0.4\nthreshold 0.6\n"),
                    ncm::parse_code::kDuplicateThreshold));
    CHECK(has_error(parse_map("threshold x\n"), ncm::parse_code::kBadNumber));
    CHECK(has_error(parse_map("concept \"a\" \"A\"\n"), ncm::parse_code::kBadIdentifier));
    CHECK(has_error(parse_map("concept 1a \"A\"\n"), ncm::parse_code::kBadIdentifier));
    CHECK(has_error(parse_map("concept a \"\"\n"), ncm::parse_code::kEmptyLabel));
    CHECK(has_error(parse_map("concept a \"A\" extra\n"), ncm::parse_code::kSyntax));
    CHECK(has_error(parse_map("concept a\n"), ncm::parse_code::kSyntax));
    CHECK(has_error(parse_map("concept a \"unclosed\n"), ncm::parse_code::kUnterminatedString));
    CHECK(has_error(parse_map("edge a b 0.5 junk\n"), ncm::parse_code::kSyntax));
    CHECK(has_error(parse_map("concept a \"A\"\nconcept b \"B\"\nedge a b 0.5\nedge a b 0.4\n"),
                    ncm::parse_code::kDuplicateEdge));
}

TEST_CASE("comments, blank lines, and CRLF endings are accepted") {
    auto parsed = parse_map(
        "# leading comment\r\n"
        "\r\n"
        "map \"m\"  # trailing comment\r\n"
        "concept a \"A # not a comment inside quotes\"\r\n");
    REQUIRE(parsed.ok());
    CHECK(parsed.document->map.concepts[0].label == "A # not a comment inside quotes");
}

TEST_CASE("escapes round-trip inside quoted strings") {
    ncm::CognitiveMap map;
    map.name = "quote \" and backslash \\";
    map.concepts = {{"a", "label with \\ and \"", ""}};
    auto parsed = parse_map(serialize_map(map));
    REQUIRE(parsed.ok());
    CHECK(parsed.document->map.name == map.name);
    CHECK(parsed.document->map.concepts[0].label == map.concepts[0].label);
}

TEST_CASE("descriptions survive the round trip") {
    auto parsed = parse_map("concept a \"A\" \"a longer story\"\n");
    REQUIRE(parsed.ok());
    CHECK(parsed.document->map.concepts[0].description == "a longer story");
    auto again = parse_map(serialize_map(parsed.document->map));
    REQUIRE(again.ok());
    CHECK(again.document->map.concepts[0].description == "a longer story");
}

TEST_CASE("serialization is canonical") {
    ncm::CognitiveMap empty;
    empty.name = "m";
    CHECK(serialize_map(empty) == "map \"m\"\nthreshold 0.5\n");

    ncm::CognitiveMap map;
    map.name = "w";
    map.concepts = {{"a", "A", ""}, {"b", "B", ""}};
    map.edges = {{"b", "a", {-1, 0}}, {"a", "b", {0.25, 0}}};
    CHECK(serialize_map(map) ==
          "map \"w\"\nthreshold 0.5\nconcept a \"A\"\nconcept b \"B\"\n"
          "edge a b 0.25\nedge b a -1\n");
}

TEST_CASE("the asset is stable under serialize-then-parse") {
    auto first = parse_map(testutil::read_text(testutil::eis_path()));
    REQUIRE(first.ok());
    auto second = parse_map(serialize_map(first.document->map));
    REQUIRE(second.ok());
    auto a = ncm::build_adjacency(first.document->map);
    auto b = ncm::build_adjacency(second.document->map);
    REQUIRE(a.n == b.n);
    for (std::size_t i = 0; i < a.cells.size(); ++i)
        CHECK(ncm::almost_equal(a.cells[i], b.cells[i], 1e-9));
}

TEST_CASE("random maps round-trip to the same adjacency matrix") {
    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 50; ++trial) {
        auto map = testutil::random_map(rng);
        auto parsed = parse_map(serialize_map(map));
        REQUIRE(parsed.ok());
        auto a = ncm::build_adjacency(map);
        auto b = ncm::build_adjacency(parsed.document->map);
        REQUIRE(a.n == b.n);
        CHECK(parsed.document->map.default_threshold ==
              doctest::Approx(map.default_threshold).epsilon(1e-9));
        for (std::size_t i = 0; i < a.cells.size(); ++i)
            CHECK(ncm::almost_equal(a.cells[i], b.cells[i], 1e-9));
    }
}

TEST_CASE("arbitrary bytes never crash the parser") {
    std::mt19937_64 rng(0xDEADBEEF);
    std::uniform_int_distribution<int> len(0, 200);
    std::uniform_int_distribution<int> byte(0, 255);
    for (int trial = 0; trial < 500; ++trial) {
        std::string text;
        int n = len(rng);
        for (int i = 0; i < n; ++i) text.push_back(static_cast<char>(byte(rng)));
        auto parsed = parse_map(text);
        CHECK((parsed.ok() || !parsed.errors.empty()));
    }
    // structured noise too
    auto parsed = parse_map("\"\"\"\nedge\nmap map map\nthreshold\n# \x01\x02");
    CHECK(!parsed.ok());
}
