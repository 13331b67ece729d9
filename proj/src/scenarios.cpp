#include "compdc/scenarios.hpp"

#include "compdc/errors.hpp"
#include "compdc/workload.hpp"
#include "detail/text.hpp"

namespace compdc {
namespace {

Node make_node(std::string id, std::vector<ResourceComponent> comps) {
    Node node;
    node.id = std::move(id);
    node.components = std::move(comps);
    return node;
}

Node general_server(std::string id, int units) {
    return make_node(std::move(id), {{ResourceKind::Cpu, units},
                                     {ResourceKind::Ram, units},
                                     {ResourceKind::Storage, units}});
}

Scenario one_rack(std::string rack_id, std::vector<Node> nodes, DisaggregationMode mode,
                  Scope scale) {
    Scenario s;
    Rack rack;
    rack.id = std::move(rack_id);
    rack.nodes = std::move(nodes);
    Pod pod;
    pod.id = "pod1";
    pod.racks.push_back(std::move(rack));
    s.dc.pods.push_back(std::move(pod));
    s.disaggregation = {mode, scale};
    return s;
}

} // namespace

std::vector<NamedScenario> builtin_scenarios() {
    std::vector<NamedScenario> out;

    // Conventional rack of uniform general-purpose servers, pooled at rack
    // reach where a server happens to be single-kind (none is here).
    out.push_back({"rack_traditional",
                   one_rack("rack1",
                            {general_server("server1", 4), general_server("server2", 4),
                             general_server("server3", 4), general_server("server4", 4)},
                            DisaggregationMode::Hybrid, Scope::Rack)});

    // One resource kind per node, pooled across the rack.
    out.push_back({"rack_physical",
                   one_rack("rack2",
                            {make_node("cpu1", {{ResourceKind::Cpu, 12}}),
                             make_node("ram1", {{ResourceKind::Ram, 12}}),
                             make_node("storage1", {{ResourceKind::Storage, 12}})},
                            DisaggregationMode::Physical, Scope::Rack)});

    // Same server hardware as the traditional rack, software-composed across
    // the whole data center.
    out.push_back({"rack_logical",
                   one_rack("rack3",
                            {general_server("server1", 4), general_server("server2", 4),
                             general_server("server3", 4), general_server("server4", 4)},
                            DisaggregationMode::Logical, Scope::Rack)});

    // Single-kind nodes pooled at rack reach plus one mixed node that joins
    // the data-center-wide pool.
    out.push_back({"rack_hybrid",
                   one_rack("rack4",
                            {make_node("cpu1", {{ResourceKind::Cpu, 12}}),
                             make_node("ram1", {{ResourceKind::Ram, 12}}),
                             make_node("storage1", {{ResourceKind::Storage, 12}}),
                             general_server("mixed1", 2)},
                            DisaggregationMode::Hybrid, Scope::Rack)});

    // One resource kind per rack, pooled across the pod.
    {
        Scenario s;
        Pod pod;
        pod.id = "pod1";
        Rack cpu_rack;
        cpu_rack.id = "rack5";
        cpu_rack.nodes = {make_node("cpu1", {{ResourceKind::Cpu, 12}}),
                          make_node("cpu2", {{ResourceKind::Cpu, 12}})};
        Rack ram_rack;
        ram_rack.id = "rack6";
        ram_rack.nodes = {make_node("ram1", {{ResourceKind::Ram, 12}}),
                          make_node("ram2", {{ResourceKind::Ram, 12}})};
        Rack storage_rack;
        storage_rack.id = "rack7";
        storage_rack.nodes = {make_node("storage1", {{ResourceKind::Storage, 12}}),
                              make_node("storage2", {{ResourceKind::Storage, 12}})};
        pod.racks = {std::move(cpu_rack), std::move(ram_rack), std::move(storage_rack)};
        s.dc.pods.push_back(std::move(pod));
        s.disaggregation = {DisaggregationMode::Physical, Scope::Pod};
        out.push_back({"pod_physical", std::move(s)});
    }

    return out;
}

std::vector<std::filesystem::path> emit_builtin_scenarios(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) {
        throw config_error("cannot create directory '" + dir.string() + "': " + ec.message());
    }
    std::vector<std::filesystem::path> written;
    for (const NamedScenario& named : builtin_scenarios()) {
        std::filesystem::path path = dir / (named.name + ".json");
        detail::write_text_file(path.string(), scenario_to_json(named.scenario));
        written.push_back(path);
    }
    std::filesystem::path workloads = dir / "workloads_table1.csv";
    detail::write_text_file(workloads.string(), workloads_to_csv(builtin_table1()));
    written.push_back(workloads);
    return written;
}

} // namespace compdc
