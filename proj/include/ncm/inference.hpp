#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ncm/map.hpp"
#include "ncm/neutro.hpp"

namespace ncm {

/// Per-concept thresholded states, indexed by concept declaration order.
using StateVector = std::vector<TriState>;

/// Per-concept pre-threshold activations.
using RawActivation = std::vector<NeutroValue>;

struct SimulationConfig {
    double threshold = 0.5;
    std::size_t max_steps = 1000;
    /// Concepts held at On after every update step. Unset means "the
    /// concepts that are On in the initial vector"; an explicit empty set
    /// disables clamping entirely.
    std::optional<std::vector<std::string>> clamp;
    bool record_trace = false;
};

struct TraceEntry {
    RawActivation raw;
    StateVector state;  // after threshold and clamping
};

struct SimulationResult {
    enum class Kind { FixedPoint, LimitCycle, StepLimitExceeded };

    Kind kind = Kind::StepLimitExceeded;
    /// FixedPoint: the single equilibrium state. LimitCycle: the cycle's
    /// states in trajectory order, first occurrence first. StepLimitExceeded:
    /// empty.
    std::vector<StateVector> states;
    std::size_t period = 0;  // LimitCycle only; equals states.size()
    std::size_t steps_taken = 0;
    std::vector<TraceEntry> trace;        // populated when record_trace is set
    std::vector<std::size_t> clamped;     // resolved clamp set, concept indices
};

/// One pass of the state vector through the matrix: entry j is the sum over
/// sources i of state_i * cells[i][j] in the neutrosophic algebra. Throws
/// DimensionMismatch.
RawActivation propagate(const AdjacencyMatrix& matrix, const StateVector& state);

/// One synchronous update: propagate, threshold every entry with k, then
/// overwrite every clamped concept with On. clamp_mask has one flag per
/// concept. Throws DimensionMismatch.
std::pair<RawActivation, StateVector> step(const AdjacencyMatrix& matrix,
                                           const StateVector& state, double k,
                                           const std::vector<bool>& clamp_mask);

/// Matrix-level simulation loop. The initial vector has the clamp applied
/// before the first step. Stops at a fixed point (next state equals the
/// current one), a limit cycle (next state equals an earlier, non-adjacent
/// one; the cycle consists of that state through the current one), or after
/// max_steps applications.
SimulationResult simulate(const AdjacencyMatrix& matrix, const StateVector& initial,
                          double k, const std::vector<bool>& clamp_mask,
                          std::size_t max_steps, bool record_trace = false);

/// Turns the config's clamp set (or its default, the initially-On concepts)
/// into a per-concept mask. Throws UnknownConcept for clamp ids the map does
/// not declare.
std::vector<bool> resolve_clamp(const CognitiveMap& map, const StateVector& initial,
                                const SimulationConfig& config);

/// Builds the adjacency matrix and runs the hidden-pattern search for the
/// given initial states. Throws DimensionMismatch, UnknownConcept, or
/// ValidationFailed (invalid map).
SimulationResult find_hidden_pattern(const CognitiveMap& map, const StateVector& initial,
                                     const SimulationConfig& config);

}  // namespace ncm
