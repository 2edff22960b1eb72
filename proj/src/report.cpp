#include "ncm/report.hpp"

#include <string>

namespace ncm {

namespace {

const char* kind_name(SimulationResult::Kind kind) {
    switch (kind) {
        case SimulationResult::Kind::FixedPoint: return "fixed_point";
        case SimulationResult::Kind::LimitCycle: return "limit_cycle";
        case SimulationResult::Kind::StepLimitExceeded: break;
    }
    return "step_limit";
}

nlohmann::ordered_json state_json(const StateVector& state) {
    auto arr = nlohmann::ordered_json::array();
    for (TriState s : state) arr.push_back(to_string(s));
    return arr;
}

}  // namespace

Report write_report(const SimulationResult& result, const CognitiveMap& map,
                    const SimulationConfig& config) {
    nlohmann::ordered_json doc;
    doc["map"] = map.name;

    nlohmann::ordered_json cfg;
    // keep the documented nine-decimal bound even for odd thresholds
    cfg["threshold"] = std::stod(format_real(config.threshold));
    auto clamp = nlohmann::ordered_json::array();
    for (std::size_t idx : result.clamped) clamp.push_back(map.concepts[idx].id);
    cfg["clamp"] = clamp;
    cfg["max_steps"] = config.max_steps;
    doc["config"] = cfg;

    if (!result.trace.empty()) {
        auto trace = nlohmann::ordered_json::array();
        for (std::size_t t = 0; t < result.trace.size(); ++t) {
            nlohmann::ordered_json entry;
            entry["step"] = t + 1;
            auto raw = nlohmann::ordered_json::array();
            for (const NeutroValue& v : result.trace[t].raw) raw.push_back(to_string(v));
            entry["raw"] = raw;
            entry["state"] = state_json(result.trace[t].state);
            trace.push_back(entry);
        }
        doc["trace"] = trace;
    }

    nlohmann::ordered_json outcome;
    outcome["kind"] = kind_name(result.kind);
    if (result.kind != SimulationResult::Kind::StepLimitExceeded) {
        auto states = nlohmann::ordered_json::array();
        for (const StateVector& s : result.states) states.push_back(state_json(s));
        outcome["states"] = states;
    }
    if (result.kind == SimulationResult::Kind::LimitCycle) outcome["period"] = result.period;
    outcome["steps_taken"] = result.steps_taken;
    doc["outcome"] = outcome;

    return Report{std::move(doc)};
}

}  // namespace ncm
