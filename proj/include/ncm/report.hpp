#pragma once

#include <string>

#include <json.hpp>

#include "ncm/inference.hpp"
#include "ncm/map.hpp"

namespace ncm {

/// Structured simulation report with a stable schema and key order:
///   map, config{threshold, clamp, max_steps}, trace?, outcome{kind,
///   states?, period?, steps_taken}. Neutrosophic values are rendered as
///   strings so indeterminacy survives serialization.
struct Report {
    nlohmann::ordered_json doc;

    std::string to_string(int indent = 2) const { return doc.dump(indent); }
};

Report write_report(const SimulationResult& result, const CognitiveMap& map,
                    const SimulationConfig& config);

}  // namespace ncm
