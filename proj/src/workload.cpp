#include "compdc/workload.hpp"

#include <set>
#include <sstream>

#include "detail/text.hpp"

namespace compdc {

int AppTemplate::demand(ResourceKind kind) const {
    switch (kind) {
        case ResourceKind::Cpu: return cpu_units;
        case ResourceKind::Ram: return ram_units;
        case ResourceKind::Storage: return storage_units;
    }
    return 0;
}

namespace {

const char* const kHeader = "name,cpu_units,ram_units,storage_units,latency_scope";

int parse_units(const std::string& field, size_t line_no, const char* field_name) {
    int value = 0;
    if (!detail::parse_int(field, value) || value < 0) {
        throw parse_error("workloads: line " + std::to_string(line_no) + ": " + field_name +
                          ": expected non-negative integer, got '" + field + "'");
    }
    return value;
}

} // namespace

WorkloadSet load_workloads(const std::string& csv_text) {
    const auto lines = detail::split_lines(csv_text);
    if (lines.empty() || detail::trim(lines[0]) != kHeader) {
        throw parse_error(std::string("workloads: line 1: expected header '") + kHeader + "'");
    }

    WorkloadSet ws;
    std::set<std::string> names;
    for (size_t i = 1; i < lines.size(); ++i) {
        const size_t line_no = i + 1;
        if (detail::trim(lines[i]).empty()) continue;
        const auto fields = detail::split_csv_line(lines[i]);
        if (fields.size() != 5) {
            throw parse_error("workloads: line " + std::to_string(line_no) + ": expected 5 fields, got " +
                              std::to_string(fields.size()));
        }
        AppTemplate app;
        app.name = detail::trim(fields[0]);
        if (app.name.empty()) {
            throw parse_error("workloads: line " + std::to_string(line_no) + ": name: empty");
        }
        app.cpu_units = parse_units(fields[1], line_no, "cpu_units");
        app.ram_units = parse_units(fields[2], line_no, "ram_units");
        app.storage_units = parse_units(fields[3], line_no, "storage_units");
        const auto scope = scope_from_string(detail::trim(fields[4]));
        if (!scope) {
            throw parse_error("workloads: line " + std::to_string(line_no) +
                              ": latency_scope: expected node|rack|pod|dc, got '" + fields[4] + "'");
        }
        app.latency_scope = *scope;

        if (app.total_units() == 0) {
            throw parse_error("workloads: line " + std::to_string(line_no) + ": app '" + app.name +
                              "': all unit demands are zero");
        }
        if (!names.insert(app.name).second) {
            throw parse_error("workloads: line " + std::to_string(line_no) + ": app '" + app.name +
                              "': duplicate name");
        }
        ws.apps.push_back(std::move(app));
    }
    return ws;
}

WorkloadSet load_workloads_file(const std::filesystem::path& path) {
    try {
        return load_workloads(detail::read_text_file(path.string()));
    } catch (const parse_error& e) {
        throw parse_error(path.string() + ": " + e.what());
    }
}

std::string workloads_to_csv(const WorkloadSet& ws) {
    std::ostringstream out;
    out << kHeader << "\n";
    for (const auto& app : ws.apps) {
        out << app.name << ',' << app.cpu_units << ',' << app.ram_units << ','
            << app.storage_units << ',' << to_string(app.latency_scope) << "\n";
    }
    return out.str();
}

WorkloadSet builtin_table1() {
    WorkloadSet ws;
    ws.apps = {
        {"A", 1, 2, 1, Scope::Pod},
        {"B", 1, 1, 2, Scope::Pod},
        {"C", 2, 1, 1, Scope::Pod},
        {"D", 1, 2, 3, Scope::Pod},
        {"E", 3, 1, 2, Scope::Pod},
        {"F", 2, 3, 1, Scope::Pod},
        {"G", 1, 2, 1, Scope::Node},
    };
    return ws;
}

} // namespace compdc
