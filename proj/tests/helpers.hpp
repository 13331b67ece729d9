#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "compdc/composer.hpp"
#include "compdc/fabric.hpp"
#include "compdc/topology.hpp"
#include "compdc/workload.hpp"

namespace testutil {

// Seed for every randomized instance generator. COMPOSABLE_FABRIC_SEED
// overrides the default; solver code never reads it.
inline unsigned test_seed() {
    if (const char* env = std::getenv("COMPOSABLE_FABRIC_SEED")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end && *end == '\0') return static_cast<unsigned>(v);
    }
    return 20260816u;
}

inline compdc::Node make_node(std::string id, std::vector<compdc::ResourceComponent> comps) {
    compdc::Node node;
    node.id = std::move(id);
    node.components = std::move(comps);
    return node;
}

inline compdc::Scenario single_rack_scenario(std::vector<compdc::Node> nodes,
                                             compdc::DisaggregationMode mode,
                                             compdc::Scope scale = compdc::Scope::Rack) {
    compdc::Scenario s;
    compdc::Rack rack;
    rack.id = "rack1";
    rack.nodes = std::move(nodes);
    compdc::Pod pod;
    pod.id = "pod1";
    pod.racks.push_back(std::move(rack));
    s.dc.pods.push_back(std::move(pod));
    s.disaggregation = {mode, scale};
    return s;
}

// Random data center of homogeneous nodes only, so every disaggregation mode
// validates on it. Component count stays within the placement-oracle bound.
inline compdc::DataCenter random_homogeneous_dc(std::mt19937& rng, int max_components = 12) {
    std::uniform_int_distribution<int> pods_dist(1, 2);
    std::uniform_int_distribution<int> kind_dist(0, 2);
    std::uniform_int_distribution<int> cap_dist(1, 8);
    std::uniform_int_distribution<int> comps_dist(1, 2);

    compdc::DataCenter dc;
    int total = 0;
    int node_seq = 0;
    const int n_pods = pods_dist(rng);
    for (int p = 0; p < n_pods && total < max_components; ++p) {
        compdc::Pod pod;
        pod.id = "pod" + std::to_string(p + 1);
        std::uniform_int_distribution<int> racks_dist(1, 2);
        const int n_racks = racks_dist(rng);
        for (int r = 0; r < n_racks && total < max_components; ++r) {
            compdc::Rack rack;
            rack.id = "rack" + std::to_string(p + 1) + "_" + std::to_string(r + 1);
            std::uniform_int_distribution<int> nodes_dist(1, 3);
            const int n_nodes = nodes_dist(rng);
            for (int n = 0; n < n_nodes && total < max_components; ++n) {
                compdc::Node node;
                node.id = "node" + std::to_string(++node_seq);
                const auto kind = static_cast<compdc::ResourceKind>(kind_dist(rng));
                const int n_comps = std::min(comps_dist(rng), max_components - total);
                for (int c = 0; c < n_comps; ++c) {
                    node.components.push_back({kind, cap_dist(rng)});
                    ++total;
                }
                rack.nodes.push_back(std::move(node));
            }
            if (!rack.nodes.empty()) pod.racks.push_back(std::move(rack));
        }
        if (!pod.racks.empty()) dc.pods.push_back(std::move(pod));
    }
    return dc;
}

// Random workload set within the placement-oracle app bound. Demands are
// small; at least one kind is nonzero per app.
inline compdc::WorkloadSet random_workloads(std::mt19937& rng, int max_apps = 5) {
    std::uniform_int_distribution<int> napps_dist(1, max_apps);
    std::uniform_int_distribution<int> demand_dist(0, 3);
    std::uniform_int_distribution<int> scope_dist(0, 3);

    compdc::WorkloadSet ws;
    const int n = napps_dist(rng);
    for (int i = 0; i < n; ++i) {
        compdc::AppTemplate app;
        app.name = "w" + std::to_string(i + 1);
        do {
            app.cpu_units = demand_dist(rng);
            app.ram_units = demand_dist(rng);
            app.storage_units = demand_dist(rng);
        } while (app.total_units() == 0);
        app.latency_scope = static_cast<compdc::Scope>(scope_dist(rng));
        ws.apps.push_back(std::move(app));
    }
    return ws;
}

// Random demand matrix with entries that are exact multiples of quantum_gbps,
// so optimal carried loads compare bitwise across independent solvers.
inline compdc::DemandMatrix random_demand(std::mt19937& rng, int n, double quantum_gbps = 25.0,
                                          int max_quanta = 12) {
    std::uniform_int_distribution<int> q_dist(0, max_quanta);
    compdc::DemandMatrix demand(n);
    for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
            if (s == t) continue;
            demand.set(s, t, quantum_gbps * q_dist(rng));
        }
    }
    return demand;
}

struct PlacementCheck {
    bool ok = true;
    std::string detail;
};

// Structural invariants every placement report must satisfy, independent of
// which solver produced it.
inline PlacementCheck check_placement_invariants(const compdc::PlacementReport& report,
                                                 const compdc::DcView& view,
                                                 const compdc::WorkloadSet& workloads) {
    auto fail = [](std::string msg) { return PlacementCheck{false, std::move(msg)}; };

    std::map<std::string, const compdc::AppTemplate*> by_name;
    for (const auto& app : workloads.apps) by_name[app.name] = &app;

    std::set<std::string> seen;
    for (const auto& alloc : report.accepted) seen.insert(alloc.app);
    for (const auto& rej : report.rejected) {
        if (seen.count(rej.app)) return fail("app both accepted and rejected: " + rej.app);
        seen.insert(rej.app);
    }
    if (seen.size() != workloads.apps.size()) return fail("report does not partition the workload");
    for (const auto& app : workloads.apps) {
        if (!seen.count(app.name)) return fail("app missing from report: " + app.name);
    }

    std::vector<int> used(view.components().size(), 0);
    for (const auto& alloc : report.accepted) {
        const compdc::AppTemplate* app = by_name.at(alloc.app);
        int got_cpu = 0, got_ram = 0, got_storage = 0;
        for (const auto& as : alloc.assignments) {
            if (as.units <= 0) return fail(alloc.app + ": non-positive assignment units");
            const int flat = view.flat_index(as.component);
            const auto& comp = view.components()[flat];
            if (comp.kind != as.kind) return fail(alloc.app + ": kind mismatch on assignment");
            used[flat] += as.units;
            switch (as.kind) {
                case compdc::ResourceKind::Cpu: got_cpu += as.units; break;
                case compdc::ResourceKind::Ram: got_ram += as.units; break;
                case compdc::ResourceKind::Storage: got_storage += as.units; break;
            }
        }
        if (got_cpu != app->cpu_units || got_ram != app->ram_units ||
            got_storage != app->storage_units) {
            return fail(alloc.app + ": assignment sums do not match the demand vector");
        }
        const compdc::Scope span = view.span_level(alloc.assignments);
        if (span > app->latency_scope) return fail(alloc.app + ": spans beyond the latency scope");
        for (const auto& as : alloc.assignments) {
            const auto& comp = view.components()[view.flat_index(as.component)];
            if (comp.scope < span) {
                return fail(alloc.app + ": component pooled narrower than the allocation span");
            }
        }
    }

    int active = 0;
    for (std::size_t i = 0; i < used.size(); ++i) {
        if (used[i] > view.components()[i].capacity) {
            return fail("component over capacity: " + view.components()[i].path);
        }
        if (used[i] > 0) ++active;
    }
    if (active != report.active_components) {
        return fail("active_components does not count the components in use");
    }
    return {};
}

struct ScheduleCheck {
    bool ok = true;
    std::string detail;
};

// Structural invariants of a targeted-fabric schedule plus consistency with
// the carried matrix it claims to realize.
inline ScheduleCheck check_schedule_invariants(const compdc::ThroughputReport& report,
                                               const compdc::TargetedFabric& fabric,
                                               const compdc::DemandMatrix& demand) {
    auto fail = [](std::string msg) { return ScheduleCheck{false, std::move(msg)}; };
    const double eps = 1e-9;
    const int n = demand.n();

    const std::vector<int> lambdas = fabric.plan.all_sorted();
    const std::set<int> lambda_set(lambdas.begin(), lambdas.end());

    std::map<int, std::set<int>> out_used;  // wavelength -> sources
    std::map<int, std::set<int>> in_used;   // wavelength -> dests
    std::vector<std::vector<double>> sched_sum(n, std::vector<double>(n, 0.0));
    for (const auto& e : report.schedule) {
        if (!lambda_set.count(e.wavelength)) return fail("schedule uses an unplanned wavelength");
        if (e.source < 0 || e.source >= n || e.dest < 0 || e.dest >= n) {
            return fail("schedule entry out of node range");
        }
        if (e.source == e.dest) return fail("schedule entry loops a node to itself");
        if (e.gbps <= 0.0 || e.gbps > fabric.rate_gbps + eps) {
            return fail("schedule entry rate outside (0, rate]");
        }
        if (!out_used[e.wavelength].insert(e.source).second) {
            return fail("wavelength reused by one source");
        }
        if (!in_used[e.wavelength].insert(e.dest).second) {
            return fail("wavelength reused toward one dest");
        }
        sched_sum[e.source][e.dest] += e.gbps;
    }

    double total = 0.0;
    std::vector<double> egress(n, 0.0), ingress(n, 0.0);
    for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
            const double carried = report.carried[s][t];
            if (carried < -eps) return fail("negative carried load");
            if (carried > demand.at(s, t) + eps) return fail("carried exceeds demand");
            if (std::abs(carried - sched_sum[s][t]) > 1e-6) {
                return fail("carried matrix disagrees with the schedule");
            }
            total += carried;
            egress[s] += carried;
            ingress[t] += carried;
        }
    }
    if (std::abs(total - report.carried_total) > 1e-6) {
        return fail("carried_total disagrees with the carried matrix");
    }
    for (int v = 0; v < n; ++v) {
        if (egress[v] > fabric.node_capacity_gbps() + eps) return fail("node egress over capacity");
        if (ingress[v] > fabric.node_capacity_gbps() + eps) {
            return fail("node ingress over capacity");
        }
    }
    return {};
}

}  // namespace testutil
