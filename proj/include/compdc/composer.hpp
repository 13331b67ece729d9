#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compdc/topology.hpp"
#include "compdc/workload.hpp"

namespace compdc {

// place_all switches from the exact solver to the greedy fallback beyond
// these instance sizes; oracle_place refuses outright beyond its own.
inline constexpr int kExactMaxComponents = 16;
inline constexpr int kExactMaxApps = 10;
inline constexpr int kOracleMaxComponents = 12;
inline constexpr int kOracleMaxApps = 7;

struct ComponentRef {
    int pod = 0;
    int rack = 0;
    int node = 0;
    int component = 0;

    bool operator==(const ComponentRef&) const = default;
};

struct Assignment {
    ComponentRef component;
    ResourceKind kind = ResourceKind::Cpu;
    int units = 0;

    bool operator==(const Assignment&) const = default;
};

struct Allocation {
    std::string app;
    std::vector<Assignment> assignments;

    bool operator==(const Allocation&) const = default;
};

enum class RejectReason { Capacity, Scope };

std::string to_string(RejectReason reason);

struct Rejection {
    std::string app;
    RejectReason reason = RejectReason::Capacity;
    std::string detail;
};

struct PlacementReport {
    std::vector<Allocation> accepted;  // workload order
    std::vector<Rejection> rejected;   // workload order
    int active_components = 0;
    bool heuristic = false;

    // Lexicographic objective: more accepted apps first, then fewer active
    // components. Smaller compares better on the second field.
    std::pair<int, int> objective_value() const {
        return {static_cast<int>(accepted.size()), active_components};
    }
};

// Flattened view of a validated data center under one disaggregation config.
// Components carry their utilization scope and a stable path string; all
// placement arithmetic runs against this index space.
class DcView {
public:
    struct Component {
        ComponentRef ref;
        ResourceKind kind = ResourceKind::Cpu;
        int capacity = 0;
        Scope scope = Scope::Dc;
        int node_flat = 0;
        int rack_flat = 0;
        int pod_flat = 0;
        std::string node_id;
        std::string path;  // pod/rack/node[index]
    };

    struct EntityGroup {
        Scope level = Scope::Node;
        std::string path;
        std::vector<int> comps;  // flat component indices inside the entity
    };

    // Validates the scenario first; any violation becomes a config_error.
    static DcView build(const DataCenter& dc, const DisaggregationConfig& config);

    const std::vector<Component>& components() const { return components_; }
    const std::vector<EntityGroup>& nodes() const { return nodes_; }
    const std::vector<EntityGroup>& racks() const { return racks_; }
    const std::vector<EntityGroup>& pods() const { return pods_; }
    const EntityGroup& dc_group() const { return dc_group_; }
    const DisaggregationConfig& config() const { return config_; }

    // Component indices ordered by (node id, component index); ties between
    // equal node ids in different racks fall back to structural order. All
    // deterministic tie-breaking walks components in this order.
    const std::vector<int>& canonical_order() const { return canonical_order_; }

    std::vector<int> capacities() const;

    // Smallest scope level spanned by a set of assignments.
    Scope span_level(const std::vector<Assignment>& assignments) const;
    std::string entity_path(const std::vector<Assignment>& assignments) const;
    int flat_index(const ComponentRef& ref) const;

private:
    std::vector<Component> components_;
    std::vector<EntityGroup> nodes_;
    std::vector<EntityGroup> racks_;
    std::vector<EntityGroup> pods_;
    EntityGroup dc_group_;
    std::vector<int> canonical_order_;
    DisaggregationConfig config_;
};

struct Feasibility {
    std::optional<Allocation> witness;
    RejectReason reason = RejectReason::Capacity;
    std::string detail;

    bool feasible() const { return witness.has_value(); }
};

// Single-app feasibility against residual capacities (indexed like
// view.components()). On success the witness takes units from components in
// canonical order within the first entity choice that fits.
Feasibility check_feasible(const AppTemplate& app, const DcView& view,
                           const std::vector<int>& residual);

// Places a workload set, maximizing accepted apps and then minimizing active
// components. Exact branch and bound up to kExactMax*; greedy first-fit
// decreasing beyond that, flagged via PlacementReport::heuristic.
PlacementReport place_all(const WorkloadSet& workloads, const DataCenter& dc,
                          const DisaggregationConfig& config);

// Independent reference solver: exhaustive subset and entity-choice search
// with unit-expansion matching feasibility. Throws config_error beyond
// kOracleMax* sizes.
PlacementReport oracle_place(const WorkloadSet& workloads, const DataCenter& dc,
                             const DisaggregationConfig& config);

bool exceeds_exact_bounds(const WorkloadSet& workloads, const DataCenter& dc);

std::string report_to_json(const PlacementReport& report, const DcView& view);
std::string report_to_csv(const PlacementReport& report, const DcView& view);

} // namespace compdc
