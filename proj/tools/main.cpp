#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "compdc/composer.hpp"
#include "compdc/cost.hpp"
#include "compdc/errors.hpp"
#include "compdc/fabric.hpp"
#include "compdc/scenarios.hpp"
#include "compdc/topology.hpp"
#include "compdc/workload.hpp"
#include "detail/text.hpp"

namespace {

using compdc::config_error;
using compdc::parse_error;

// One fully described run: which computation, which input files, which
// parameter overrides, where the outputs go. Inputs are loaded and checked
// before any computation starts.
struct ExperimentSpec {
    std::string kind;
    std::string scenario_path;
    std::string workloads_ref;  // path or the literal "table1"
    std::string demand_path;
    std::string design;
    std::string mode_override;
    std::string scale_override;
    bool allow_heuristic = false;
    std::string n_range = "2..64";
    std::string y_range = "1..40";
    int t = 4;
    double rate = 100.0;
    double cap = 800.0;
    double price_generic = 1.0;
    std::string out;           // empty = stdout
    std::string csv_out;       // place only
    std::string schedule_out;  // throughput only
    std::string out_dir;       // scenarios only
};

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::fputs(content.c_str(), stdout);
        return;
    }
    compdc::detail::write_text_file(path, content);
}

compdc::Scenario load_scenario_with_overrides(const ExperimentSpec& spec) {
    compdc::Scenario scenario = compdc::load_scenario_file(spec.scenario_path);
    if (!spec.mode_override.empty()) {
        auto mode = compdc::disaggregation_mode_from_string(spec.mode_override);
        if (!mode) throw config_error("unknown mode '" + spec.mode_override + "'");
        scenario.disaggregation.mode = *mode;
    }
    if (!spec.scale_override.empty()) {
        auto scale = compdc::scope_from_string(spec.scale_override);
        if (!scale) throw config_error("unknown scale '" + spec.scale_override + "'");
        scenario.disaggregation.physical_scale = *scale;
    }
    return scenario;
}

compdc::WorkloadSet load_workloads_ref(const std::string& ref) {
    if (ref == "table1") return compdc::builtin_table1();
    return compdc::load_workloads_file(ref);
}

int parse_int_or_throw(const std::string& text, const std::string& what) {
    int value = 0;
    if (!compdc::detail::parse_int(text, value)) {
        throw config_error(what + ": '" + text + "' is not an integer");
    }
    return value;
}

std::vector<int> parse_range(const std::string& text, const std::string& what) {
    std::string::size_type dots = text.find("..");
    std::vector<int> values;
    if (dots == std::string::npos) {
        values.push_back(parse_int_or_throw(text, what));
        return values;
    }
    int lo = parse_int_or_throw(text.substr(0, dots), what + " lower bound");
    int hi = parse_int_or_throw(text.substr(dots + 2), what + " upper bound");
    if (lo > hi) throw config_error(what + ": range lower bound exceeds upper bound");
    for (int v = lo; v <= hi; ++v) values.push_back(v);
    return values;
}

int run_validate(const ExperimentSpec& spec) {
    compdc::Scenario scenario = load_scenario_with_overrides(spec);
    compdc::ValidationResult result =
        compdc::validate_dc(scenario.dc, scenario.disaggregation);
    nlohmann::ordered_json j;
    j["ok"] = result.ok();
    j["violations"] = nlohmann::ordered_json::array();
    for (const compdc::Violation& v : result.violations) {
        nlohmann::ordered_json one;
        one["entity_id"] = v.entity_id;
        one["message"] = v.message;
        j["violations"].push_back(std::move(one));
    }
    write_output(spec.out, j.dump(2) + "\n");
    return 0;
}

int run_place(const ExperimentSpec& spec) {
    compdc::Scenario scenario = load_scenario_with_overrides(spec);
    compdc::WorkloadSet workloads = load_workloads_ref(spec.workloads_ref);
    if (compdc::exceeds_exact_bounds(workloads, scenario.dc) && !spec.allow_heuristic) {
        throw config_error(
            "instance exceeds the exact solver bounds (" +
            std::to_string(compdc::kExactMaxComponents) + " components, " +
            std::to_string(compdc::kExactMaxApps) +
            " apps); pass --allow-heuristic to accept a greedy placement");
    }
    compdc::DcView view = compdc::DcView::build(scenario.dc, scenario.disaggregation);
    compdc::PlacementReport report =
        compdc::place_all(workloads, scenario.dc, scenario.disaggregation);
    write_output(spec.out, compdc::report_to_json(report, view));
    if (!spec.csv_out.empty()) {
        compdc::detail::write_text_file(spec.csv_out, compdc::report_to_csv(report, view));
    }
    return 0;
}

int run_throughput(const ExperimentSpec& spec) {
    compdc::DemandMatrix demand = compdc::DemandMatrix::from_csv_file(spec.demand_path);
    compdc::ThroughputReport report;
    if (spec.design == "targeted") {
        compdc::TargetedFabric fabric =
            compdc::TargetedFabric::with_defaults(demand.n(), spec.t, spec.rate);
        report = compdc::max_throughput_targeted(fabric, demand);
    } else if (spec.design == "generic") {
        if (!spec.schedule_out.empty()) {
            throw config_error("schedule output is only available for the targeted design");
        }
        compdc::GenericFabric fabric{demand.n(), spec.cap};
        report = compdc::max_throughput_generic(fabric, demand);
    } else {
        throw config_error("unknown design '" + spec.design + "' (expected targeted or generic)");
    }
    write_output(spec.out, compdc::throughput_to_json(report, demand, spec.design));
    if (!spec.schedule_out.empty()) {
        compdc::detail::write_text_file(spec.schedule_out,
                                        compdc::schedule_to_csv(report, demand));
    }
    return 0;
}

int run_cost_sweep(const ExperimentSpec& spec) {
    std::vector<int> n_values = parse_range(spec.n_range, "--n");
    std::vector<int> y_values = parse_range(spec.y_range, "--y");
    compdc::CostParams base;
    base.generic_cap_gbps = spec.cap;
    base.targeted_t = spec.t;
    base.targeted_rate_gbps = spec.rate;
    base.price_generic_per_gbps = spec.price_generic;
    std::vector<compdc::SweepRow> rows = compdc::sweep(n_values, y_values, base);
    write_output(spec.out, compdc::sweep_to_csv(rows));
    return 0;
}

int run_scenarios(const ExperimentSpec& spec) {
    std::vector<std::filesystem::path> written = compdc::emit_builtin_scenarios(spec.out_dir);
    nlohmann::ordered_json j;
    j["written"] = nlohmann::ordered_json::array();
    for (const auto& path : written) j["written"].push_back(path.string());
    write_output(spec.out, j.dump(2) + "\n");
    return 0;
}

int run(const ExperimentSpec& spec) {
    if (spec.kind == "validate") return run_validate(spec);
    if (spec.kind == "place") return run_place(spec);
    if (spec.kind == "throughput") return run_throughput(spec);
    if (spec.kind == "cost-sweep") return run_cost_sweep(spec);
    if (spec.kind == "scenarios") return run_scenarios(spec);
    throw config_error("unknown experiment kind '" + spec.kind + "'");
}

void emit_error(const std::string& kind, const std::string& message) {
    nlohmann::json j;
    j["error"]["kind"] = kind;
    j["error"]["message"] = message;
    std::fputs((j.dump() + "\n").c_str(), stderr);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"composable data center placement and interconnect toolkit"};
    app.require_subcommand(1);
    ExperimentSpec spec;

    CLI::App* validate = app.add_subcommand("validate", "check a scenario file");
    validate->add_option("--scenario", spec.scenario_path, "scenario json file")->required();
    validate->add_option("--mode", spec.mode_override,
                         "override disaggregation mode (physical|logical|hybrid)");
    validate->add_option("--scale", spec.scale_override,
                         "override physical pooling reach (rack|pod|dc)");
    validate->add_option("--out", spec.out, "write the json report here instead of stdout");

    CLI::App* place = app.add_subcommand("place", "place app templates onto a scenario");
    place->add_option("--scenario", spec.scenario_path, "scenario json file")->required();
    place->add_option("--workloads", spec.workloads_ref,
                      "workloads csv file, or 'table1' for the builtin templates")
        ->required();
    place->add_option("--mode", spec.mode_override,
                      "override disaggregation mode (physical|logical|hybrid)");
    place->add_option("--scale", spec.scale_override,
                      "override physical pooling reach (rack|pod|dc)");
    place->add_flag("--allow-heuristic", spec.allow_heuristic,
                    "accept a greedy placement when the instance exceeds the exact bounds");
    place->add_option("--out", spec.out, "write the json report here instead of stdout");
    place->add_option("--csv", spec.csv_out, "also write a flat per-app csv here");

    CLI::App* throughput = app.add_subcommand("throughput", "carried load for a demand matrix");
    throughput->add_option("--demand", spec.demand_path, "square demand csv")->required();
    throughput->add_option("--design", spec.design, "targeted or generic")->required();
    throughput->add_option("--t", spec.t, "transceivers per interface (targeted)");
    throughput->add_option("--rate", spec.rate, "gbps per wavelength (targeted)");
    throughput->add_option("--cap", spec.cap, "gbps per link (generic)");
    throughput->add_option("--out", spec.out, "write the json report here instead of stdout");
    throughput->add_option("--schedule", spec.schedule_out,
                           "also write the wavelength schedule csv here (targeted)");

    CLI::App* cost = app.add_subcommand("cost-sweep", "interconnect capex over n and price");
    cost->add_option("--n", spec.n_range, "node count or range a..b (default 2..64)");
    cost->add_option("--y", spec.y_range, "targeted price or range a..b (default 1..40)");
    cost->add_option("--t", spec.t, "transceivers per interface");
    cost->add_option("--rate", spec.rate, "gbps per wavelength");
    cost->add_option("--cap", spec.cap, "gbps per generic link");
    cost->add_option("--price-generic", spec.price_generic, "generic price per gbps");
    cost->add_option("--out", spec.out, "write the csv here instead of stdout");

    CLI::App* scenarios = app.add_subcommand("scenarios", "write the builtin scenario files");
    scenarios->add_option("--out-dir", spec.out_dir, "directory to fill")->required();
    scenarios->add_option("--out", spec.out, "write the json file list here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        emit_error("usage", e.what());
        return 1;
    }

    for (CLI::App* sub : {validate, place, throughput, cost, scenarios}) {
        if (sub->parsed()) spec.kind = sub->get_name();
    }

    try {
        return run(spec);
    } catch (const parse_error& e) {
        emit_error("parse", e.what());
        return 1;
    } catch (const config_error& e) {
        emit_error("config", e.what());
        return 1;
    } catch (const std::exception& e) {
        emit_error("internal", e.what());
        return 2;
    }
}
