#include "compdc/topology.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace compdc {

using ordered_json = nlohmann::ordered_json;

const char* to_string(ResourceKind kind) {
    switch (kind) {
        case ResourceKind::Cpu: return "cpu";
        case ResourceKind::Ram: return "ram";
        case ResourceKind::Storage: return "storage";
    }
    return "?";
}

std::optional<ResourceKind> resource_kind_from_string(std::string_view s) {
    if (s == "cpu") return ResourceKind::Cpu;
    if (s == "ram") return ResourceKind::Ram;
    if (s == "storage") return ResourceKind::Storage;
    return std::nullopt;
}

const char* to_string(Scope s) {
    switch (s) {
        case Scope::Node: return "node";
        case Scope::Rack: return "rack";
        case Scope::Pod: return "pod";
        case Scope::Dc: return "dc";
    }
    return "?";
}

std::optional<Scope> scope_from_string(std::string_view s) {
    if (s == "node") return Scope::Node;
    if (s == "rack") return Scope::Rack;
    if (s == "pod") return Scope::Pod;
    if (s == "dc") return Scope::Dc;
    return std::nullopt;
}

const char* to_string(DisaggregationMode m) {
    switch (m) {
        case DisaggregationMode::Physical: return "physical";
        case DisaggregationMode::Logical: return "logical";
        case DisaggregationMode::Hybrid: return "hybrid";
    }
    return "?";
}

std::optional<DisaggregationMode> disaggregation_mode_from_string(std::string_view s) {
    if (s == "physical") return DisaggregationMode::Physical;
    if (s == "logical") return DisaggregationMode::Logical;
    if (s == "hybrid") return DisaggregationMode::Hybrid;
    return std::nullopt;
}

bool Node::homogeneous() const {
    for (size_t i = 1; i < components.size(); ++i) {
        if (components[i].kind != components[0].kind) return false;
    }
    return true;
}

namespace {

bool scale_valid_for_pooling(Scope s) {
    return s == Scope::Rack || s == Scope::Pod || s == Scope::Dc;
}

void check_unique(std::vector<Violation>& out, const std::string& owner,
                  const std::vector<std::string>& ids, const char* level) {
    std::set<std::string> seen;
    for (const auto& id : ids) {
        if (!seen.insert(id).second) {
            out.push_back({id, std::string("duplicate ") + level + " id within " + owner});
        }
    }
}

} // namespace

ValidationResult validate_dc(const DataCenter& dc, const DisaggregationConfig& cfg) {
    ValidationResult result;
    auto& v = result.violations;

    const bool pooled = cfg.mode == DisaggregationMode::Physical ||
                        cfg.mode == DisaggregationMode::Hybrid;
    if (pooled && !scale_valid_for_pooling(cfg.physical_scale)) {
        v.push_back({"<config>", std::string("physical_scale must be rack, pod or dc, got ") +
                                     to_string(cfg.physical_scale)});
    }

    std::vector<std::string> pod_ids;
    for (const auto& pod : dc.pods) {
        pod_ids.push_back(pod.id);
        std::vector<std::string> rack_ids;
        for (const auto& rack : pod.racks) {
            rack_ids.push_back(rack.id);
            std::vector<std::string> node_ids;
            for (const auto& node : rack.nodes) {
                node_ids.push_back(node.id);
                for (size_t c = 0; c < node.components.size(); ++c) {
                    if (node.components[c].capacity < 0) {
                        v.push_back({node.id, "component " + std::to_string(c) +
                                                  " has negative capacity"});
                    }
                }
                if (cfg.mode == DisaggregationMode::Physical && !node.homogeneous()) {
                    v.push_back({node.id,
                                 "heterogeneous node not allowed under physical disaggregation"});
                }
            }
            check_unique(v, "rack " + rack.id, node_ids, "node");
        }
        check_unique(v, "pod " + pod.id, rack_ids, "rack");
    }
    check_unique(v, "datacenter", pod_ids, "pod");
    return result;
}

Scope utilization_scope(const Node& node, const DisaggregationConfig& cfg) {
    switch (cfg.mode) {
        case DisaggregationMode::Logical:
            return Scope::Dc;
        case DisaggregationMode::Physical:
            if (!scale_valid_for_pooling(cfg.physical_scale)) {
                throw config_error("invalid physical_scale for physical disaggregation");
            }
            if (!node.homogeneous()) {
                throw config_error("node '" + node.id +
                                   "' is heterogeneous under physical disaggregation");
            }
            return cfg.physical_scale;
        case DisaggregationMode::Hybrid:
            if (!scale_valid_for_pooling(cfg.physical_scale)) {
                throw config_error("invalid physical_scale for hybrid disaggregation");
            }
            return node.homogeneous() ? cfg.physical_scale : Scope::Dc;
    }
    throw config_error("unknown disaggregation mode");
}

namespace {

// json.hpp throws its own exception types; rewrap with scenario context.
template <typename F>
auto scenario_ctx(F&& f) {
    try {
        return f();
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("scenario: ") + e.what());
    }
}

template <typename T>
T parse_enum_field(const ordered_json& j, const char* field,
                   std::optional<T> (*from_string)(std::string_view)) {
    const std::string raw = j.at(field).template get<std::string>();
    auto parsed = from_string(raw);
    if (!parsed) {
        throw parse_error(std::string("scenario: bad value '") + raw + "' for field '" + field +
                          "'");
    }
    return *parsed;
}

int parse_capacity(const ordered_json& j) {
    if (!j.is_number_integer() || j.get<long long>() < 0) {
        throw parse_error("scenario: component capacity must be a non-negative integer");
    }
    return j.get<int>();
}

} // namespace

Scenario load_scenario(const std::string& json_text) {
    return scenario_ctx([&] {
        const auto j = ordered_json::parse(json_text);
        Scenario s;
        for (const auto& jp : j.at("pods")) {
            Pod pod;
            pod.id = jp.at("id").get<std::string>();
            for (const auto& jr : jp.at("racks")) {
                Rack rack;
                rack.id = jr.at("id").get<std::string>();
                for (const auto& jn : jr.at("nodes")) {
                    Node node;
                    node.id = jn.at("id").get<std::string>();
                    for (const auto& jc : jn.at("components")) {
                        ResourceComponent comp;
                        comp.kind = parse_enum_field<ResourceKind>(jc, "kind",
                                                                   resource_kind_from_string);
                        comp.capacity = parse_capacity(jc.at("capacity"));
                        node.components.push_back(comp);
                    }
                    rack.nodes.push_back(std::move(node));
                }
                pod.racks.push_back(std::move(rack));
            }
            s.dc.pods.push_back(std::move(pod));
        }
        const auto& jd = j.at("disaggregation");
        s.disaggregation.mode =
            parse_enum_field<DisaggregationMode>(jd, "mode", disaggregation_mode_from_string);
        if (jd.contains("physical_scale")) {
            s.disaggregation.physical_scale =
                parse_enum_field<Scope>(jd, "physical_scale", scope_from_string);
        } else if (s.disaggregation.mode != DisaggregationMode::Logical) {
            throw parse_error("scenario: physical/hybrid disaggregation requires physical_scale");
        }
        return s;
    });
}

Scenario load_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open scenario file: " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return load_scenario(buf.str());
    } catch (const parse_error& e) {
        throw parse_error(path.string() + ": " + e.what());
    }
}

std::string scenario_to_json(const Scenario& scenario) {
    ordered_json j;
    j["pods"] = ordered_json::array();
    for (const auto& pod : scenario.dc.pods) {
        ordered_json jp;
        jp["id"] = pod.id;
        jp["racks"] = ordered_json::array();
        for (const auto& rack : pod.racks) {
            ordered_json jr;
            jr["id"] = rack.id;
            jr["nodes"] = ordered_json::array();
            for (const auto& node : rack.nodes) {
                ordered_json jn;
                jn["id"] = node.id;
                jn["components"] = ordered_json::array();
                for (const auto& comp : node.components) {
                    jn["components"].push_back(
                        {{"kind", to_string(comp.kind)}, {"capacity", comp.capacity}});
                }
                jr["nodes"].push_back(std::move(jn));
            }
            jp["racks"].push_back(std::move(jr));
        }
        j["pods"].push_back(std::move(jp));
    }
    j["disaggregation"] = {{"mode", to_string(scenario.disaggregation.mode)},
                           {"physical_scale", to_string(scenario.disaggregation.physical_scale)}};
    return j.dump(2) + "\n";
}

} // namespace compdc
