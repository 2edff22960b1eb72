#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "ncm/inference.hpp"
#include "ncm/map.hpp"

namespace ncm {

struct WeightedNeighbor {
    std::string id;
    NeutroValue weight;
};

/// Degree view of one concept. Neighbor lists are sorted by descending
/// determinate weight with indeterminate entries last; ties keep concept
/// declaration order. Indeterminate edges count toward both degrees.
struct InfluenceProfile {
    std::string concept_id;
    std::size_t in_degree = 0;
    std::size_t out_degree = 0;
    std::vector<WeightedNeighbor> incoming;  // (source, weight)
    std::vector<WeightedNeighbor> outgoing;  // (target, weight)
};

std::vector<InfluenceProfile> influence_profiles(const CognitiveMap& map);

/// Real-weighted edges ranked by descending |weight|, ties by (source,
/// target) declaration index; indeterminate edges are excluded. At most
/// top_n entries.
std::vector<Edge> strongest_edges(const CognitiveMap& map, std::size_t top_n);

/// Edges whose weight is I, in declaration order.
std::vector<Edge> indeterminate_edges(const CognitiveMap& map);

struct ScenarioRow {
    std::vector<std::size_t> on_set;  // sorted concept indices
    SimulationResult outcome;
};

/// Runs find_hidden_pattern for every on-set of the requested sizes
/// (std::nullopt = every non-empty on-set), rows in lexicographic on-set
/// order. The config's clamp default applies per row, i.e. each row clamps
/// its own on-set. Throws TooManyScenarios when the row count would exceed
/// 2^20, unless force is set.
std::vector<ScenarioRow> enumerate_scenarios(const CognitiveMap& map,
                                             const SimulationConfig& config,
                                             const std::optional<std::set<std::size_t>>& sizes,
                                             bool force = false);

struct AttractorGroup {
    SimulationResult::Kind kind = SimulationResult::Kind::FixedPoint;
    /// FixedPoint: one state. LimitCycle: the cycle rotated so its
    /// lexicographically smallest state comes first.
    std::vector<StateVector> attractor;
    std::vector<std::vector<std::size_t>> members;  // on-sets reaching it
};

/// Groups rows by identical outcome, sorted by descending member count
/// (stable: ties keep first-appearance order).
std::vector<AttractorGroup> group_by_attractor(const std::vector<ScenarioRow>& rows);

}  // namespace ncm
