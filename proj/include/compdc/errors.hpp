#pragma once

#include <stdexcept>
#include <string>

namespace compdc {

// Malformed or invariant-violating input text (scenario JSON, workload CSV,
// demand matrix CSV). The message carries file/line/field context where known.
class parse_error : public std::runtime_error {
public:
    explicit parse_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Invalid configuration or misuse of an operation (mode/topology mismatch,
// dimension mismatch, solver bound exceeded).
class config_error : public std::runtime_error {
public:
    explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace compdc
