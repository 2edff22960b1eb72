#include "ncm/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <tuple>

#include "ncm/errors.hpp"

namespace ncm {

std::vector<InfluenceProfile> influence_profiles(const CognitiveMap& map) {
    const std::size_t n = map.concepts.size();
    std::vector<InfluenceProfile> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i].concept_id = map.concepts[i].id;

    // (entry, declaration index of the neighbor) for tie-breaking
    std::vector<std::vector<std::pair<WeightedNeighbor, std::size_t>>> in(n), outgoing(n);
    for (const Edge& e : map.edges) {
        std::size_t i = *map.find_concept(e.from);
        std::size_t j = *map.find_concept(e.to);
        in[j].push_back({{e.from, e.weight}, i});
        outgoing[i].push_back({{e.to, e.weight}, j});
    }

    auto order = [](const auto& a, const auto& b) {
        bool ai = a.first.weight.is_pure_indeterminate();
        bool bi = b.first.weight.is_pure_indeterminate();
        return std::tuple(ai, ai ? 0.0 : -a.first.weight.det, a.second) <
               std::tuple(bi, bi ? 0.0 : -b.first.weight.det, b.second);
    };
    for (std::size_t c = 0; c < n; ++c) {
        std::sort(in[c].begin(), in[c].end(), order);
        std::sort(outgoing[c].begin(), outgoing[c].end(), order);
        for (auto& [nb, _] : in[c]) out[c].incoming.push_back(std::move(nb));
        for (auto& [nb, _] : outgoing[c]) out[c].outgoing.push_back(std::move(nb));
        out[c].in_degree = out[c].incoming.size();
        out[c].out_degree = out[c].outgoing.size();
    }
    return out;
}

std::vector<Edge> strongest_edges(const CognitiveMap& map, std::size_t top_n) {
    std::vector<std::pair<Edge, std::pair<std::size_t, std::size_t>>> real;
    for (const Edge& e : map.edges) {
        if (e.weight.is_pure_indeterminate()) continue;
        real.push_back({e, {*map.find_concept(e.from), *map.find_concept(e.to)}});
    }
    std::sort(real.begin(), real.end(), [](const auto& a, const auto& b) {
        double ma = std::fabs(a.first.weight.det);
        double mb = std::fabs(b.first.weight.det);
        if (ma != mb) return ma > mb;
        return a.second < b.second;
    });
    if (real.size() > top_n) real.resize(top_n);
    std::vector<Edge> out;
    out.reserve(real.size());
    for (auto& [e, _] : real) out.push_back(std::move(e));
    return out;
}

std::vector<Edge> indeterminate_edges(const CognitiveMap& map) {
    std::vector<Edge> out;
    for (const Edge& e : map.edges)
        if (e.weight.is_pure_indeterminate()) out.push_back(e);
    return out;
}

namespace {

std::uint64_t saturating_row_count(std::size_t n, const std::optional<std::set<std::size_t>>& sizes) {
    constexpr std::uint64_t kCap = UINT64_MAX;
    if (!sizes) {
        if (n >= 64) return kCap;
        return (std::uint64_t{1} << n) - 1;
    }
    std::uint64_t total = 0;
    for (std::size_t k : *sizes) {
        if (k > n) continue;
        // C(n, k) with saturation
        std::uint64_t c = 1;
        for (std::size_t i = 1; i <= k; ++i) {
            if (c > kCap / (n - k + i)) return kCap;
            c = c * (n - k + i) / i;
        }
        if (total > kCap - c) return kCap;
        total += c;
    }
    return total;
}

void emit_subsets(std::size_t n, std::vector<std::size_t>& prefix, std::size_t start,
                  const std::optional<std::set<std::size_t>>& sizes, std::size_t max_size,
                  const std::function<void(const std::vector<std::size_t>&)>& visit) {
    if (prefix.size() >= max_size) return;
    for (std::size_t i = start; i < n; ++i) {
        prefix.push_back(i);
        if (!sizes || sizes->count(prefix.size())) visit(prefix);
        emit_subsets(n, prefix, i + 1, sizes, max_size, visit);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<ScenarioRow> enumerate_scenarios(const CognitiveMap& map,
                                             const SimulationConfig& config,
                                             const std::optional<std::set<std::size_t>>& sizes,
                                             bool force) {
    const std::size_t n = map.concepts.size();
    constexpr std::uint64_t kGuard = std::uint64_t{1} << 20;
    if (!force && saturating_row_count(n, sizes) > kGuard)
        throw TooManyScenarios("enumeration over " + std::to_string(n) +
                               " concepts exceeds the scenario guard; pass force to override");

    AdjacencyMatrix matrix = build_adjacency(map);
    std::vector<bool> explicit_mask;
    if (config.clamp) explicit_mask = resolve_clamp(map, {}, config);

    std::vector<ScenarioRow> rows;
    auto run_one = [&](const std::vector<std::size_t>& on_set) {
        StateVector initial(n, TriState::Off);
        for (std::size_t c : on_set) initial[c] = TriState::On;
        std::vector<bool> mask;
        if (config.clamp) {
            mask = explicit_mask;
        } else {
            mask.assign(n, false);
            for (std::size_t c : on_set) mask[c] = true;
        }
        ScenarioRow row;
        row.on_set = on_set;
        row.outcome = simulate(matrix, initial, config.threshold, mask, config.max_steps,
                               /*record_trace=*/false);
        rows.push_back(std::move(row));
    };

    if (sizes && sizes->count(0)) run_one({});
    std::size_t max_size = sizes ? (sizes->empty() ? 0 : *sizes->rbegin()) : n;
    std::vector<std::size_t> prefix;
    emit_subsets(n, prefix, 0, sizes, std::min(max_size, n), run_one);
    return rows;
}

namespace {

// Cycle states are pairwise distinct, so rotating the unique minimum to the
// front is a canonical form.
std::vector<StateVector> canonical_attractor(const SimulationResult& r) {
    if (r.kind != SimulationResult::Kind::LimitCycle || r.states.size() < 2) return r.states;
    auto min_it = std::min_element(r.states.begin(), r.states.end());
    std::vector<StateVector> rotated;
    rotated.insert(rotated.end(), min_it, r.states.end());
    rotated.insert(rotated.end(), r.states.begin(), min_it);
    return rotated;
}

}  // namespace

std::vector<AttractorGroup> group_by_attractor(const std::vector<ScenarioRow>& rows) {
    using Key = std::pair<int, std::vector<StateVector>>;
    std::map<Key, std::size_t> index;
    std::vector<AttractorGroup> groups;
    for (const ScenarioRow& row : rows) {
        Key key{static_cast<int>(row.outcome.kind), canonical_attractor(row.outcome)};
        auto [it, inserted] = index.try_emplace(key, groups.size());
        if (inserted) {
            AttractorGroup g;
            g.kind = row.outcome.kind;
            g.attractor = key.second;
            groups.push_back(std::move(g));
        }
        groups[it->second].members.push_back(row.on_set);
    }
    std::stable_sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) {
        return a.members.size() > b.members.size();
    });
    return groups;
}

}  // namespace ncm
