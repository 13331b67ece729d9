#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "compdc/topology.hpp"

namespace compdc {

// One application infrastructure template: unit demands per resource kind
// plus the largest hierarchy entity the application tolerates between the
// components of its logical server.
struct AppTemplate {
    std::string name;
    int cpu_units = 0;
    int ram_units = 0;
    int storage_units = 0;
    Scope latency_scope = Scope::Pod;

    int demand(ResourceKind kind) const;
    int total_units() const { return cpu_units + ram_units + storage_units; }

    bool operator==(const AppTemplate&) const = default;
};

struct WorkloadSet {
    std::vector<AppTemplate> apps;

    bool operator==(const WorkloadSet&) const = default;
};

// Parses CSV text with header `name,cpu_units,ram_units,storage_units,latency_scope`
// and scope values node|rack|pod|dc. Preserves file order. Throws parse_error
// with line/field context on malformed input, duplicate names, or an app whose
// three demands are all zero.
WorkloadSet load_workloads(const std::string& csv_text);
WorkloadSet load_workloads_file(const std::filesystem::path& path);
std::string workloads_to_csv(const WorkloadSet& ws);

// The seven bundled example applications A..G.
WorkloadSet builtin_table1();

} // namespace compdc
