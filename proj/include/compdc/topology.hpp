#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "compdc/errors.hpp"

namespace compdc {

enum class ResourceKind { Cpu, Ram, Storage };

const char* to_string(ResourceKind kind);
std::optional<ResourceKind> resource_kind_from_string(std::string_view s);

// Hierarchy levels, totally ordered by containment: Node < Rack < Pod < Dc.
enum class Scope { Node = 0, Rack = 1, Pod = 2, Dc = 3 };

constexpr bool operator<(Scope a, Scope b) { return static_cast<int>(a) < static_cast<int>(b); }
constexpr bool operator<=(Scope a, Scope b) { return static_cast<int>(a) <= static_cast<int>(b); }
constexpr bool operator>(Scope a, Scope b) { return static_cast<int>(a) > static_cast<int>(b); }
constexpr bool operator>=(Scope a, Scope b) { return static_cast<int>(a) >= static_cast<int>(b); }

const char* to_string(Scope s);
std::optional<Scope> scope_from_string(std::string_view s);

// One disaggregated resource component. Capacities are integer units on the
// application-template scale; no fractional allocation.
struct ResourceComponent {
    ResourceKind kind = ResourceKind::Cpu;
    int capacity = 0;

    bool operator==(const ResourceComponent&) const = default;
};

struct Node {
    std::string id;
    std::vector<ResourceComponent> components;

    // True iff all components share one kind. A component-less node counts as
    // homogeneous; it contributes nothing either way.
    bool homogeneous() const;

    bool operator==(const Node&) const = default;
};

struct Rack {
    std::string id;
    std::vector<Node> nodes;

    bool operator==(const Rack&) const = default;
};

struct Pod {
    std::string id;
    std::vector<Rack> racks;

    bool operator==(const Pod&) const = default;
};

struct DataCenter {
    std::vector<Pod> pods;

    bool operator==(const DataCenter&) const = default;
};

enum class DisaggregationMode { Physical, Logical, Hybrid };

const char* to_string(DisaggregationMode m);
std::optional<DisaggregationMode> disaggregation_mode_from_string(std::string_view s);

struct DisaggregationConfig {
    DisaggregationMode mode = DisaggregationMode::Logical;
    // Scale of physical pooling; used by Physical and Hybrid modes and must be
    // one of Rack, Pod, Dc there. Ignored under Logical.
    Scope physical_scale = Scope::Rack;

    bool operator==(const DisaggregationConfig&) const = default;
};

struct Violation {
    std::string entity_id;
    std::string message;

    bool operator==(const Violation&) const = default;
};

struct ValidationResult {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

// Checks structural invariants (non-negative capacities, id uniqueness per
// level) and mode consistency (Physical requires homogeneous nodes; Physical/
// Hybrid require a physical_scale of rack, pod or dc). Violations are data,
// not failures; the list is deterministic in structure order.
ValidationResult validate_dc(const DataCenter& dc, const DisaggregationConfig& cfg);

// Largest hierarchy entity within which this node's components may be
// combined with others. Physical: the configured scale. Logical: the whole
// DC. Hybrid: the configured scale for homogeneous nodes, the whole DC for
// heterogeneous ones. Throws config_error for combinations that cannot pass
// validate_dc (heterogeneous node under Physical, bad physical_scale).
Scope utilization_scope(const Node& node, const DisaggregationConfig& cfg);

// A scenario file bundles the hardware hierarchy with the disaggregation
// configuration applied to it.
struct Scenario {
    DataCenter dc;
    DisaggregationConfig disaggregation;

    bool operator==(const Scenario&) const = default;
};

Scenario load_scenario(const std::string& json_text);               // throws parse_error
Scenario load_scenario_file(const std::filesystem::path& path);     // throws parse_error
std::string scenario_to_json(const Scenario& scenario);

} // namespace compdc
