#include <doctest.h>

#include <filesystem>
#include <string>
#include <vector>

#include "compdc/scenarios.hpp"
#include "compdc/topology.hpp"
#include "compdc/workload.hpp"
#include "detail/text.hpp"

using namespace compdc;

namespace {

std::filesystem::path fresh_dir(const std::string& leaf) {
    std::filesystem::path dir = std::filesystem::temp_directory_path() / leaf;
    std::filesystem::remove_all(dir);
    return dir;
}

}  // namespace

TEST_CASE("builtin scenarios come in a fixed order and all validate") {
    const std::vector<NamedScenario> all = builtin_scenarios();
    REQUIRE(all.size() == 5);
    CHECK(all[0].name == "rack_traditional");
    CHECK(all[1].name == "rack_physical");
    CHECK(all[2].name == "rack_logical");
    CHECK(all[3].name == "rack_hybrid");
    CHECK(all[4].name == "pod_physical");
    for (const NamedScenario& named : all) {
        CAPTURE(named.name);
        CHECK(validate_dc(named.scenario.dc, named.scenario.disaggregation).ok());
    }
}

TEST_CASE("builtin layouts match their documented shapes") {
    const std::vector<NamedScenario> all = builtin_scenarios();

    const Scenario& traditional = all[0].scenario;
    CHECK(traditional.disaggregation.mode == DisaggregationMode::Hybrid);
    REQUIRE(traditional.dc.pods.size() == 1);
    REQUIRE(traditional.dc.pods[0].racks.size() == 1);
    const Rack& track = traditional.dc.pods[0].racks[0];
    REQUIRE(track.nodes.size() == 4);
    for (const Node& node : track.nodes) {
        REQUIRE(node.components.size() == 3);
        CHECK(!node.homogeneous());
        for (const ResourceComponent& comp : node.components) CHECK(comp.capacity == 4);
    }

    const Scenario& physical = all[1].scenario;
    CHECK(physical.disaggregation.mode == DisaggregationMode::Physical);
    CHECK(physical.disaggregation.physical_scale == Scope::Rack);
    const Rack& prack = physical.dc.pods[0].racks[0];
    REQUIRE(prack.nodes.size() == 3);
    CHECK(prack.nodes[0] == Node{"cpu1", {{ResourceKind::Cpu, 12}}});
    CHECK(prack.nodes[1] == Node{"ram1", {{ResourceKind::Ram, 12}}});
    CHECK(prack.nodes[2] == Node{"storage1", {{ResourceKind::Storage, 12}}});

    const Scenario& logical = all[2].scenario;
    CHECK(logical.disaggregation.mode == DisaggregationMode::Logical);
    CHECK(logical.dc.pods[0].racks[0].nodes == traditional.dc.pods[0].racks[0].nodes);

    const Scenario& hybrid = all[3].scenario;
    CHECK(hybrid.disaggregation.mode == DisaggregationMode::Hybrid);
    const Rack& hrack = hybrid.dc.pods[0].racks[0];
    REQUIRE(hrack.nodes.size() == 4);
    CHECK(hrack.nodes[3] == Node{"mixed1",
                                 {{ResourceKind::Cpu, 2},
                                  {ResourceKind::Ram, 2},
                                  {ResourceKind::Storage, 2}}});

    const Scenario& pod = all[4].scenario;
    CHECK(pod.disaggregation.mode == DisaggregationMode::Physical);
    CHECK(pod.disaggregation.physical_scale == Scope::Pod);
    REQUIRE(pod.dc.pods[0].racks.size() == 3);
    for (const Rack& rack : pod.dc.pods[0].racks) {
        REQUIRE(rack.nodes.size() == 2);
        for (const Node& node : rack.nodes) CHECK(node.homogeneous());
    }
}

TEST_CASE("builtin scenario json names the disaggregation explicitly") {
    const std::vector<NamedScenario> all = builtin_scenarios();
    const std::string text = scenario_to_json(all[1].scenario);
    CHECK(text.find("\"mode\": \"physical\"") != std::string::npos);
    CHECK(text.find("\"physical_scale\": \"rack\"") != std::string::npos);
    CHECK(load_scenario(text) == all[1].scenario);
}

TEST_CASE("emitting the builtin files writes loadable copies") {
    const std::filesystem::path dir = fresh_dir("compdc_scenarios_test");
    const std::vector<std::filesystem::path> written = emit_builtin_scenarios(dir);
    REQUIRE(written.size() == 6);
    CHECK(written[0].filename() == "rack_traditional.json");
    CHECK(written[4].filename() == "pod_physical.json");
    CHECK(written[5].filename() == "workloads_table1.csv");

    const std::vector<NamedScenario> all = builtin_scenarios();
    for (std::size_t i = 0; i < all.size(); ++i) {
        CAPTURE(all[i].name);
        REQUIRE(std::filesystem::exists(written[i]));
        CHECK(load_scenario_file(written[i]) == all[i].scenario);
    }
    CHECK(load_workloads_file(written[5]) == builtin_table1());

    // Re-emitting is byte-stable.
    const std::string before = detail::read_text_file(written[1].string());
    emit_builtin_scenarios(dir);
    CHECK(detail::read_text_file(written[1].string()) == before);

    std::filesystem::remove_all(dir);
}
