#include <doctest.h>

#include <random>
#include <set>

#include "ncm/analysis.hpp"
#include "ncm/errors.hpp"
#include "test_helpers.hpp"

using ncm::SimulationConfig;
using ncm::SimulationResult;
using ncm::TriState;

TEST_CASE("influence profiles count and order neighbors") {
    auto map = testutil::load_eis();
    auto profiles = ncm::influence_profiles(map);
    REQUIRE(profiles.size() == 9);

    const auto& x1 = profiles[0];
    CHECK(x1.in_degree == 6);
    CHECK(x1.out_degree == 2);
    // descending determinate weight, declaration order on ties
    REQUIRE(x1.incoming.size() == 6);
    CHECK(x1.incoming[0].id == "x3");
    CHECK(x1.incoming[1].id == "x7");
    CHECK(x1.incoming[2].id == "x8");
    CHECK(x1.incoming[3].id == "x9");
    CHECK(x1.incoming[4].id == "x5");
    CHECK(x1.incoming[5].id == "x4");

    CHECK(profiles[6].in_degree == 0);   // nothing points at x7
    CHECK(profiles[6].out_degree == 6);

    // indeterminate edges count toward degrees and sort last
    const auto& x9 = profiles[8];
    CHECK(x9.in_degree == 4);
    CHECK(x9.incoming.back().weight == ncm::kIndeterminate);
}

TEST_CASE("degrees sum to the edge count") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 30; ++trial) {
        auto map = testutil::random_map(rng);
        auto profiles = ncm::influence_profiles(map);
        std::size_t in = 0, out = 0;
        for (const auto& p : profiles) {
            in += p.in_degree;
            out += p.out_degree;
        }
        CHECK(in == map.edges.size());
        CHECK(out == map.edges.size());
    }
}

TEST_CASE("profiles of an edgeless map are all zero") {
    ncm::CognitiveMap map;
    map.concepts = {{"a", "A", ""}, {"b", "B", ""}};
    for (const auto& p : ncm::influence_profiles(map)) {
        CHECK(p.in_degree == 0);
        CHECK(p.out_degree == 0);
    }
}

TEST_CASE("strongest edges rank by magnitude with declaration tie-break") {
    auto map = testutil::load_eis();

    auto top3 = ncm::strongest_edges(map, 3);
    REQUIRE(top3.size() == 3);
    CHECK((top3[0].from == "x5" && top3[0].to == "x8"));
    CHECK((top3[1].from == "x7" && top3[1].to == "x5"));
    CHECK((top3[2].from == "x8" && top3[2].to == "x3"));
    for (const auto& e : top3) CHECK(e.weight.det == 1.0);

    auto top1 = ncm::strongest_edges(map, 1);
    REQUIRE(top1.size() == 1);
    CHECK((top1[0].from == "x5" && top1[0].to == "x8"));
}

TEST_CASE("a single-edge map returns that edge") {
    ncm::CognitiveMap map;
    map.concepts = {{"a", "A", ""}, {"b", "B", ""}};
    map.edges = {{"a", "b", {-0.4, 0}}};
    auto top = ncm::strongest_edges(map, 5);
    REQUIRE(top.size() == 1);
    CHECK(top[0].from == "a");
}

TEST_CASE("negative weights rank by absolute value") {
    ncm::CognitiveMap map;
    map.concepts = {{"a", "A", ""}, {"b", "B", ""}, {"c", "C", ""}};
    map.edges = {{"a", "b", {0.5, 0}}, {"b", "c", {-0.9, 0}}};
    auto top = ncm::strongest_edges(map, 1);
    REQUIRE(top.size() == 1);
    CHECK(top[0].to == "c");
}

TEST_CASE("indeterminate edges list in declaration order") {
    auto map = testutil::load_eis();
    auto edges = ncm::indeterminate_edges(map);
    REQUIRE(edges.size() == 2);
    CHECK((edges[0].from == "x4" && edges[0].to == "x9"));
    CHECK((edges[1].from == "x7" && edges[1].to == "x9"));

    ncm::CognitiveMap real_only;
    real_only.concepts = {{"a", "A", ""}, {"b", "B", ""}};
    real_only.edges = {{"a", "b", {0.5, 0}}};
    CHECK(ncm::indeterminate_edges(real_only).empty());

    real_only.edges.push_back({"b", "a", ncm::kIndeterminate});
    auto one = ncm::indeterminate_edges(real_only);
    REQUIRE(one.size() == 1);
    CHECK(one[0].from == "b");
}

TEST_CASE("single-concept scenarios come back in declaration order") {
    auto map = testutil::load_eis();
    auto rows = ncm::enumerate_scenarios(map, {}, std::set<std::size_t>{1});
    REQUIRE(rows.size() == 9);
    for (std::size_t i = 0; i < 9; ++i) {
        REQUIRE(rows[i].on_set.size() == 1);
        CHECK(rows[i].on_set[0] == i);
    }
    REQUIRE(rows[0].outcome.kind == SimulationResult::Kind::FixedPoint);
    ncm::StateVector expected(9, TriState::Off);
    expected[0] = expected[1] = expected[8] = TriState::On;
    CHECK(rows[0].outcome.states.front() == expected);
}

TEST_CASE("the empty on-set runs when size 0 is requested") {
    auto map = testutil::load_eis();
    auto rows = ncm::enumerate_scenarios(map, {}, std::set<std::size_t>{0});
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].on_set.empty());
    REQUIRE(rows[0].outcome.kind == SimulationResult::Kind::FixedPoint);
    CHECK(rows[0].outcome.states.front() == ncm::StateVector(9, TriState::Off));
}

TEST_CASE("full enumeration covers every non-empty on-set in lexicographic order") {
    auto map = testutil::load_eis();
    auto rows = ncm::enumerate_scenarios(map, {}, std::nullopt);
    REQUIRE(rows.size() == 511);
    CHECK(rows[0].on_set == std::vector<std::size_t>{0});
    CHECK(rows[1].on_set == std::vector<std::size_t>{0, 1});
    CHECK(rows.back().on_set == std::vector<std::size_t>{8});
    std::set<std::vector<std::size_t>> distinct;
    for (const auto& row : rows) distinct.insert(row.on_set);
    CHECK(distinct.size() == 511);
}

TEST_CASE("the scenario guard trips on large maps unless forced") {
    ncm::CognitiveMap map;
    for (int i = 0; i < 21; ++i)
        map.concepts.push_back({"c" + std::to_string(i), "C" + std::to_string(i), ""});
    CHECK_THROWS_AS(ncm::enumerate_scenarios(map, {}, std::nullopt), ncm::TooManyScenarios);
    // explicit small sizes stay under the guard
    auto rows = ncm::enumerate_scenarios(map, {}, std::set<std::size_t>{1});
    CHECK(rows.size() == 21);
}

TEST_CASE("the worked on-sets do not share an attractor") {
    auto map = testutil::load_eis();
    auto rows = ncm::enumerate_scenarios(map, {}, std::set<std::size_t>{1, 2});

    auto groups = ncm::group_by_attractor(rows);
    std::size_t members = 0;
    for (const auto& g : groups) members += g.members.size();
    CHECK(members == rows.size());

    // {x1} settles at (1,1,0,...,1) while {x1,x3} holds x3 as well, so the
    // fixed points differ at position 3 even though x2 and x9 agree
    const std::vector<std::size_t> only_x1{0};
    const std::vector<std::size_t> x1_x3{0, 2};
    const ncm::AttractorGroup* g1 = nullptr;
    const ncm::AttractorGroup* g13 = nullptr;
    for (const auto& g : groups)
        for (const auto& m : g.members) {
            if (m == only_x1) g1 = &g;
            if (m == x1_x3) g13 = &g;
        }
    REQUIRE(g1 != nullptr);
    REQUIRE(g13 != nullptr);
    CHECK(g1 != g13);
    CHECK(g1->attractor.front()[1] == TriState::On);
    CHECK(g13->attractor.front()[1] == TriState::On);
    CHECK(g1->attractor.front()[8] == TriState::On);
    CHECK(g13->attractor.front()[8] == TriState::On);
}

TEST_CASE("identical outcomes group together") {
    ncm::ScenarioRow a;
    a.on_set = {0};
    a.outcome.kind = SimulationResult::Kind::FixedPoint;
    a.outcome.states = {{TriState::On, TriState::Off}};
    ncm::ScenarioRow b = a;
    b.on_set = {1};

    auto groups = ncm::group_by_attractor({a, b});
    REQUIRE(groups.size() == 1);
    CHECK(groups[0].members.size() == 2);

    CHECK(ncm::group_by_attractor({}).empty());
}

TEST_CASE("groups sort by member count") {
    auto map = testutil::load_eis();
    auto rows = ncm::enumerate_scenarios(map, {}, std::nullopt);
    auto groups = ncm::group_by_attractor(rows);
    REQUIRE(!groups.empty());
    for (std::size_t i = 1; i < groups.size(); ++i)
        CHECK(groups[i - 1].members.size() >= groups[i].members.size());
}

TEST_CASE("enumeration is a pure function of its inputs") {
    auto map = testutil::load_eis();
    auto a = ncm::enumerate_scenarios(map, {}, std::set<std::size_t>{1, 2});
    auto b = ncm::enumerate_scenarios(map, {}, std::set<std::size_t>{1, 2});
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].on_set == b[i].on_set);
        CHECK(a[i].outcome.kind == b[i].outcome.kind);
        CHECK(a[i].outcome.states == b[i].outcome.states);
        CHECK(a[i].outcome.steps_taken == b[i].outcome.steps_taken);
    }
}

TEST_CASE("cycles group under a canonical rotation") {
    // two rows reporting the same 2-cycle from different phases
    ncm::StateVector s0{TriState::On, TriState::Off};
    ncm::StateVector s1{TriState::Off, TriState::On};
    ncm::ScenarioRow a;
    a.on_set = {0};
    a.outcome.kind = SimulationResult::Kind::LimitCycle;
    a.outcome.period = 2;
    a.outcome.states = {s0, s1};
    ncm::ScenarioRow b;
    b.on_set = {1};
    b.outcome.kind = SimulationResult::Kind::LimitCycle;
    b.outcome.period = 2;
    b.outcome.states = {s1, s0};

    auto groups = ncm::group_by_attractor({a, b});
    REQUIRE(groups.size() == 1);
    CHECK(groups[0].members.size() == 2);
    CHECK(groups[0].attractor.front() == s1);  // Off < On, so s1 leads
}
