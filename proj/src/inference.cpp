#include "ncm/inference.hpp"

#include <algorithm>

#include "ncm/errors.hpp"

namespace ncm {

RawActivation propagate(const AdjacencyMatrix& matrix, const StateVector& state) {
    if (state.size() != matrix.n)
        throw DimensionMismatch("state vector length does not match concept count");
    RawActivation out(matrix.n);
    for (std::size_t i = 0; i < matrix.n; ++i) {
        if (state[i] == TriState::Off) continue;  // zero contributes nothing
        NeutroValue s = to_value(state[i]);
        for (std::size_t j = 0; j < matrix.n; ++j) out[j] += s * matrix.at(i, j);
    }
    return out;
}

std::pair<RawActivation, StateVector> step(const AdjacencyMatrix& matrix,
                                           const StateVector& state, double k,
                                           const std::vector<bool>& clamp_mask) {
    if (clamp_mask.size() != matrix.n)
        throw DimensionMismatch("clamp mask length does not match concept count");
    RawActivation raw = propagate(matrix, state);
    StateVector next(matrix.n);
    for (std::size_t j = 0; j < matrix.n; ++j) next[j] = threshold(raw[j], k);
    for (std::size_t j = 0; j < matrix.n; ++j)
        if (clamp_mask[j]) next[j] = TriState::On;
    return {std::move(raw), std::move(next)};
}

SimulationResult simulate(const AdjacencyMatrix& matrix, const StateVector& initial,
                          double k, const std::vector<bool>& clamp_mask,
                          std::size_t max_steps, bool record_trace) {
    if (initial.size() != matrix.n)
        throw DimensionMismatch("initial vector length does not match concept count");

    SimulationResult result;
    for (std::size_t j = 0; j < matrix.n; ++j)
        if (clamp_mask[j]) result.clamped.push_back(j);

    StateVector current = initial;
    for (std::size_t j : result.clamped) current[j] = TriState::On;

    std::vector<StateVector> seen;
    seen.push_back(current);

    for (std::size_t t = 1; t <= max_steps; ++t) {
        auto [raw, next] = step(matrix, current, k, clamp_mask);
        if (record_trace) result.trace.push_back({std::move(raw), next});

        if (next == current) {
            result.kind = SimulationResult::Kind::FixedPoint;
            result.states = {std::move(next)};
            result.steps_taken = t;
            return result;
        }
        // seen.back() == current, already ruled out above
        auto hit = std::find(seen.begin(), seen.end() - 1, next);
        if (hit != seen.end() - 1) {
            result.kind = SimulationResult::Kind::LimitCycle;
            result.states.assign(hit, seen.end());
            result.period = result.states.size();
            result.steps_taken = t;
            return result;
        }
        seen.push_back(next);
        current = std::move(next);
    }

    result.kind = SimulationResult::Kind::StepLimitExceeded;
    result.steps_taken = max_steps;
    return result;
}

std::vector<bool> resolve_clamp(const CognitiveMap& map, const StateVector& initial,
                                const SimulationConfig& config) {
    std::vector<bool> mask(map.concepts.size(), false);
    if (config.clamp) {
        for (const std::string& id : *config.clamp) mask[concept_index(map, id)] = true;
    } else {
        for (std::size_t j = 0; j < initial.size() && j < mask.size(); ++j)
            if (initial[j] == TriState::On) mask[j] = true;
    }
    return mask;
}

SimulationResult find_hidden_pattern(const CognitiveMap& map, const StateVector& initial,
                                     const SimulationConfig& config) {
    if (initial.size() != map.concepts.size())
        throw DimensionMismatch("initial vector length does not match concept count");
    AdjacencyMatrix matrix = build_adjacency(map);
    std::vector<bool> mask = resolve_clamp(map, initial, config);
    return simulate(matrix, initial, config.threshold, mask, config.max_steps,
                    config.record_trace);
}

}  // namespace ncm
