#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "compdc/topology.hpp"

namespace compdc {

struct NamedScenario {
    std::string name;  // file stem
    Scenario scenario;
};

// Ready-made rack and pod layouts covering the disaggregation modes.
std::vector<NamedScenario> builtin_scenarios();

// Writes every builtin scenario as <dir>/<name>.json plus the builtin app
// templates as workloads_table1.csv. Returns the paths written, in order.
std::vector<std::filesystem::path> emit_builtin_scenarios(const std::filesystem::path& dir);

} // namespace compdc
