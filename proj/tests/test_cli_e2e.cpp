#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "compdc/scenarios.hpp"
#include "compdc/topology.hpp"
#include "detail/text.hpp"

using nlohmann::json;

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

const std::filesystem::path& work_dir() {
    static const std::filesystem::path dir = [] {
        std::filesystem::path d =
            std::filesystem::temp_directory_path() / "compdc_cli_e2e";
        std::filesystem::remove_all(d);
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

CliResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int seq = 0;
    const std::filesystem::path out = work_dir() / ("stdout" + std::to_string(seq) + ".txt");
    const std::filesystem::path err = work_dir() / ("stderr" + std::to_string(seq) + ".txt");
    ++seq;
    const std::string cmd = env_prefix + COMPDC_CLI_PATH + " " + args + " > " + out.string() +
                            " 2> " + err.string();
    const int raw = std::system(cmd.c_str());
    CliResult result;
    result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.out = slurp(out);
    result.err = slurp(err);
    return result;
}

json parse_error_line(const CliResult& r) {
    REQUIRE(!r.err.empty());
    return json::parse(r.err);
}

// Scenario files emitted once for the whole suite.
const std::filesystem::path& scenario_dir() {
    static const std::filesystem::path dir = [] {
        std::filesystem::path d = work_dir() / "scenarios";
        compdc::emit_builtin_scenarios(d);
        return d;
    }();
    return dir;
}

std::string scenario_file(const std::string& name) {
    return (scenario_dir() / (name + ".json")).string();
}

std::filesystem::path write_file(const std::string& name, const std::string& content) {
    const std::filesystem::path path = work_dir() / name;
    compdc::detail::write_text_file(path.string(), content);
    return path;
}

}  // namespace

TEST_CASE("cli help exits cleanly") {
    CliResult top = run_cli("--help");
    CHECK(top.exit_code == 0);
    CHECK(top.out.find("validate") != std::string::npos);
    CHECK(top.out.find("throughput") != std::string::npos);

    CliResult sub = run_cli("place --help");
    CHECK(sub.exit_code == 0);
    CHECK(sub.out.find("--allow-heuristic") != std::string::npos);
}

TEST_CASE("cli rejects unknown or missing subcommands as usage errors") {
    CliResult none = run_cli("");
    CHECK(none.exit_code == 1);
    CHECK(parse_error_line(none).at("error").at("kind") == "usage");

    CliResult bogus = run_cli("frobnicate");
    CHECK(bogus.exit_code == 1);
    CHECK(parse_error_line(bogus).at("error").at("kind") == "usage");

    CliResult missing = run_cli("validate");
    CHECK(missing.exit_code == 1);
    CHECK(parse_error_line(missing).at("error").at("kind") == "usage");
}

TEST_CASE("cli scenarios subcommand writes the builtin files") {
    const std::filesystem::path dir = work_dir() / "emitted";
    CliResult r = run_cli("scenarios --out-dir " + dir.string());
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j.at("written").size() == 6);
    for (const auto& path : j.at("written")) {
        CHECK(std::filesystem::exists(path.get<std::string>()));
    }
}

TEST_CASE("cli validate reports ok and violations as data") {
    CliResult ok = run_cli("validate --scenario " + scenario_file("rack_physical"));
    REQUIRE(ok.exit_code == 0);
    const json jok = json::parse(ok.out);
    CHECK(jok.at("ok") == true);
    CHECK(jok.at("violations").empty());

    // The traditional rack is heterogeneous, so forcing physical pooling
    // flags every server.
    CliResult bad = run_cli("validate --scenario " + scenario_file("rack_traditional") +
                            " --mode physical");
    REQUIRE(bad.exit_code == 0);
    const json jbad = json::parse(bad.out);
    CHECK(jbad.at("ok") == false);
    REQUIRE(jbad.at("violations").size() == 4);
    CHECK(jbad.at("violations")[0].at("entity_id") == "server1");
    CHECK(jbad.at("violations")[0].at("message") ==
          "heterogeneous node not allowed under physical disaggregation");

    CliResult scale = run_cli("validate --scenario " + scenario_file("rack_physical") +
                              " --scale node");
    REQUIRE(scale.exit_code == 0);
    CHECK(json::parse(scale.out).at("ok") == false);

    CliResult pod = run_cli("validate --scenario " + scenario_file("rack_physical") +
                            " --scale pod");
    REQUIRE(pod.exit_code == 0);
    CHECK(json::parse(pod.out).at("ok") == true);

    CliResult unknown = run_cli("validate --scenario " + scenario_file("rack_physical") +
                                " --mode partial");
    CHECK(unknown.exit_code == 1);
    CHECK(parse_error_line(unknown).at("error").at("kind") == "config");

    CliResult missing = run_cli("validate --scenario /nonexistent.json");
    CHECK(missing.exit_code == 1);
    CHECK(parse_error_line(missing).at("error").at("kind") == "parse");
}

TEST_CASE("cli place handles the builtin workloads end to end") {
    CliResult r = run_cli("place --scenario " + scenario_file("rack_physical") +
                          " --workloads table1");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    REQUIRE(j.at("accepted").size() == 6);
    CHECK(j.at("accepted")[0].at("app") == "A");
    CHECK(j.at("accepted")[0].at("entity_path") == "pod1/rack2");
    REQUIRE(j.at("rejected").size() == 1);
    CHECK(j.at("rejected")[0].at("app") == "G");
    CHECK(j.at("rejected")[0].at("reason") == "scope");
    CHECK(j.at("active_components") == 3);
    CHECK(j.at("heuristic") == false);
}

TEST_CASE("cli place writes json and csv outputs to files") {
    const std::filesystem::path out = work_dir() / "place.json";
    const std::filesystem::path csv = work_dir() / "place.csv";
    CliResult r = run_cli("place --scenario " + scenario_file("rack_physical") +
                          " --workloads table1 --out " + out.string() + " --csv " + csv.string());
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.empty());
    CHECK(json::parse(slurp(out)).at("active_components") == 3);
    CHECK(slurp(csv) ==
          "app,status,reason,entity_path\n"
          "A,accepted,,pod1/rack2\n"
          "B,accepted,,pod1/rack2\n"
          "C,accepted,,pod1/rack2\n"
          "D,accepted,,pod1/rack2\n"
          "E,accepted,,pod1/rack2\n"
          "F,accepted,,pod1/rack2\n"
          "G,rejected,scope,\n");
}

TEST_CASE("cli place accepts workload csv files and mode overrides") {
    const std::filesystem::path apps =
        write_file("apps.csv",
                   "name,cpu_units,ram_units,storage_units,latency_scope\n"
                   "solo,2,2,2,rack\n");
    CliResult r = run_cli("place --scenario " + scenario_file("rack_physical") +
                          " --workloads " + apps.string());
    REQUIRE(r.exit_code == 0);
    CHECK(json::parse(r.out).at("accepted").size() == 1);

    // Hybrid pooling over the traditional rack spans the dc, so a dc-scoped
    // override changes nothing; forcing physical mode fails validation.
    CliResult invalid = run_cli("place --scenario " + scenario_file("rack_traditional") +
                                " --workloads table1 --mode physical");
    CHECK(invalid.exit_code == 1);
    CHECK(parse_error_line(invalid).at("error").at("kind") == "config");

    CliResult bad_csv = run_cli("place --scenario " + scenario_file("rack_physical") +
                                " --workloads " +
                                write_file("bad.csv", "name,cpu\nx,1\n").string());
    CHECK(bad_csv.exit_code == 1);
    CHECK(parse_error_line(bad_csv).at("error").at("kind") == "parse");
}

TEST_CASE("cli place gates the greedy fallback behind a flag") {
    compdc::Scenario big;
    compdc::Pod pod;
    pod.id = "pod1";
    compdc::Rack rack;
    rack.id = "rack1";
    for (int i = 0; i < 17; ++i) {
        compdc::Node node;
        node.id = "n" + std::to_string(i + 10);
        node.components = {{compdc::ResourceKind::Cpu, 2}};
        rack.nodes.push_back(node);
    }
    pod.racks.push_back(rack);
    big.dc.pods.push_back(pod);
    big.disaggregation = {compdc::DisaggregationMode::Logical, compdc::Scope::Rack};
    const std::filesystem::path path = write_file("big.json", compdc::scenario_to_json(big));

    CliResult refused = run_cli("place --scenario " + path.string() + " --workloads table1");
    CHECK(refused.exit_code == 1);
    const json jerr = parse_error_line(refused);
    CHECK(jerr.at("error").at("kind") == "config");
    CHECK(jerr.at("error").at("message").get<std::string>().find("--allow-heuristic") !=
          std::string::npos);

    CliResult allowed = run_cli("place --scenario " + path.string() +
                                " --workloads table1 --allow-heuristic");
    REQUIRE(allowed.exit_code == 0);
    CHECK(json::parse(allowed.out).at("heuristic") == true);
}

TEST_CASE("cli throughput covers both designs") {
    const std::filesystem::path demand = write_file("demand.csv", "a,b\n0,500\n500,0\n");

    CliResult targeted = run_cli("throughput --demand " + demand.string() +
                                 " --design targeted --t 1 --rate 100");
    REQUIRE(targeted.exit_code == 0);
    const json jt = json::parse(targeted.out);
    CHECK(jt.at("design") == "targeted");
    CHECK(jt.at("carried_gbps_total") == 400.0);
    CHECK(jt.at("optimal") == true);

    const std::filesystem::path sched = work_dir() / "sched.csv";
    CliResult with_schedule = run_cli("throughput --demand " + demand.string() +
                                      " --design targeted --t 1 --rate 100 --schedule " +
                                      sched.string());
    REQUIRE(with_schedule.exit_code == 0);
    CHECK(slurp(sched) ==
          "wavelength,source,dest,gbps\n"
          "1,a,b,100\n"
          "1,b,a,100\n"
          "2,a,b,100\n"
          "2,b,a,100\n");

    CliResult generic = run_cli("throughput --demand " + demand.string() + " --design generic");
    REQUIRE(generic.exit_code == 0);
    const json jg = json::parse(generic.out);
    CHECK(jg.at("design") == "generic");
    CHECK(jg.at("carried_gbps_total") == 1000.0);
    CHECK(jg.at("schedule").empty());

    CliResult refused = run_cli("throughput --demand " + demand.string() +
                                " --design generic --schedule " + sched.string());
    CHECK(refused.exit_code == 1);
    CHECK(parse_error_line(refused).at("error").at("kind") == "config");

    CliResult bogus = run_cli("throughput --demand " + demand.string() + " --design mesh");
    CHECK(bogus.exit_code == 1);
    CHECK(parse_error_line(bogus).at("error").at("kind") == "config");

    CliResult malformed = run_cli("throughput --demand " +
                                  write_file("bad_demand.csv", "a,b\n0,x\n1,0\n").string() +
                                  " --design targeted");
    CHECK(malformed.exit_code == 1);
    CHECK(parse_error_line(malformed).at("error").at("kind") == "parse");
}

TEST_CASE("cli cost-sweep prints the grid and honors ranges") {
    CliResult single = run_cli("cost-sweep --n 35 --y 1");
    REQUIRE(single.exit_code == 0);
    CHECK(single.out ==
          "n,y,capex_generic,capex_targeted,ratio\n"
          "35,1,952000,28000,34\n");

    CliResult full = run_cli("cost-sweep");
    REQUIRE(full.exit_code == 0);
    const auto lines = compdc::detail::split_lines(full.out);
    CHECK(lines.size() == 1 + 63u * 40u);
    CHECK(lines[0] == "n,y,capex_generic,capex_targeted,ratio");
    CHECK(lines[1] == "2,1,1600,1600,1");
    CHECK(lines.back() == "64,40,3225600,2048000,1.575");

    CliResult range = run_cli("cost-sweep --n 2..4 --y 2");
    REQUIRE(range.exit_code == 0);
    CHECK(compdc::detail::split_lines(range.out).size() == 4);

    CliResult backwards = run_cli("cost-sweep --n 5..3");
    CHECK(backwards.exit_code == 1);
    CHECK(parse_error_line(backwards).at("error").at("kind") == "config");

    CliResult garbage = run_cli("cost-sweep --n abc");
    CHECK(garbage.exit_code == 1);
    CHECK(parse_error_line(garbage).at("error").at("kind") == "config");
}

TEST_CASE("cli output bytes are deterministic and ignore the seed variable") {
    const std::string args = "place --scenario " + scenario_file("rack_hybrid") +
                             " --workloads table1";
    CliResult first = run_cli(args);
    CliResult second = run_cli(args);
    REQUIRE(first.exit_code == 0);
    CHECK(first.out == second.out);

    CliResult seeded = run_cli(args, "COMPOSABLE_FABRIC_SEED=987654321 ");
    REQUIRE(seeded.exit_code == 0);
    CHECK(seeded.out == first.out);
}
