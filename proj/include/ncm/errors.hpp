#pragma once

#include <stdexcept>
#include <string>

namespace ncm {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A map failed validation where a valid one is required.
struct ValidationFailed : Error {
    using Error::Error;
};

/// A concept id was looked up that the map does not declare.
struct UnknownConcept : Error {
    explicit UnknownConcept(const std::string& id)
        : Error("unknown concept: " + id) {}
};

/// Vector/matrix sizes disagree with the map's concept count.
struct DimensionMismatch : Error {
    using Error::Error;
};

/// Scenario enumeration would exceed the safety guard.
struct TooManyScenarios : Error {
    using Error::Error;
};

}  // namespace ncm
