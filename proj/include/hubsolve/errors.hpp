#pragma once

#include <stdexcept>
#include <string>

namespace hubsolve {

// Malformed input file; message names the offending line.
struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// A desk-scale cap was exceeded (InstanceTooLarge, GadgetTooLarge,
// ParamsTooLarge, CombinatorialBlowup, BlockTooLarge).
struct cap_error : std::runtime_error {
    explicit cap_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Structural validation failed (hub bounds, arity preconditions,
// wildcard property, ...).
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace hubsolve
