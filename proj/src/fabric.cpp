#include "compdc/fabric.hpp"

#include <algorithm>
#include <limits>

#include <json.hpp>

#include "compdc/errors.hpp"
#include "detail/bipartite.hpp"
#include "detail/text.hpp"

namespace compdc {

WavelengthPlan WavelengthPlan::split_band(int t) {
    WavelengthPlan plan;
    for (int i = 1; i <= t; ++i) plan.lambda_a.push_back(i);
    for (int i = t + 1; i <= 2 * t; ++i) plan.lambda_b.push_back(i);
    return plan;
}

std::vector<int> WavelengthPlan::all_sorted() const {
    std::vector<int> all = lambda_a;
    all.insert(all.end(), lambda_b.begin(), lambda_b.end());
    std::sort(all.begin(), all.end());
    return all;
}

TargetedFabric TargetedFabric::with_defaults(int n_nodes, int t, double rate) {
    TargetedFabric f;
    f.n_nodes = n_nodes;
    f.t_per_interface = t;
    f.rate_gbps = rate;
    f.plan = WavelengthPlan::split_band(t);
    return f;
}

ValidationResult validate_plan(const TargetedFabric& fabric) {
    ValidationResult result;
    if (fabric.n_nodes < 2) {
        result.violations.push_back({"fabric", "needs at least 2 nodes"});
    }
    if (fabric.t_per_interface < 1) {
        result.violations.push_back({"fabric", "needs at least 1 transceiver per interface"});
    }
    if (!(fabric.rate_gbps > 0.0)) {
        result.violations.push_back({"fabric", "wavelength rate must be positive"});
    }
    const std::size_t t = static_cast<std::size_t>(std::max(fabric.t_per_interface, 0));
    if (fabric.plan.lambda_a.size() != t) {
        result.violations.push_back({"plan", "band a must hold exactly t wavelengths"});
    }
    if (fabric.plan.lambda_b.size() != t) {
        result.violations.push_back({"plan", "band b must hold exactly t wavelengths"});
    }
    std::vector<int> all = fabric.plan.lambda_a;
    all.insert(all.end(), fabric.plan.lambda_b.begin(), fabric.plan.lambda_b.end());
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end()) {
        result.violations.push_back({"plan", "wavelength ids must be distinct across both bands"});
    }
    return result;
}

DemandMatrix::DemandMatrix(int n) {
    for (int i = 0; i < n; ++i) ids_.push_back("n" + std::to_string(i));
    demand_.assign(ids_.size(), std::vector<double>(ids_.size(), 0.0));
}

DemandMatrix::DemandMatrix(std::vector<std::string> ids) : ids_(std::move(ids)) {
    demand_.assign(ids_.size(), std::vector<double>(ids_.size(), 0.0));
}

void DemandMatrix::set(int src, int dst, double gbps) {
    if (src < 0 || src >= n() || dst < 0 || dst >= n()) {
        throw config_error("demand index out of range");
    }
    if (src == dst) throw config_error("self demand must stay zero");
    if (gbps < 0.0) throw config_error("demand must be non-negative");
    demand_[src][dst] = gbps;
}

DemandMatrix DemandMatrix::from_csv(const std::string& text) {
    std::vector<std::string> lines = detail::split_lines(text);
    std::size_t row = 0;
    while (row < lines.size() && detail::trim(lines[row]).empty()) ++row;
    if (row == lines.size()) throw parse_error("demand csv: missing header row");

    std::vector<std::string> ids = detail::split_csv_line(lines[row]);
    for (std::size_t i = 0; i < ids.size(); ++i) {
        ids[i] = detail::trim(ids[i]);
        if (ids[i].empty()) {
            throw parse_error("demand csv line " + std::to_string(row + 1) + ": empty node id");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (ids[j] == ids[i]) {
                throw parse_error("demand csv line " + std::to_string(row + 1) +
                                  ": duplicate node id '" + ids[i] + "'");
            }
        }
    }

    DemandMatrix m(ids);
    const int n = m.n();
    int filled = 0;
    for (std::size_t li = row + 1; li < lines.size(); ++li) {
        if (detail::trim(lines[li]).empty()) continue;
        if (filled == n) {
            throw parse_error("demand csv line " + std::to_string(li + 1) +
                              ": more rows than node ids");
        }
        std::vector<std::string> fields = detail::split_csv_line(lines[li]);
        if (static_cast<int>(fields.size()) != n) {
            throw parse_error("demand csv line " + std::to_string(li + 1) + ": expected " +
                              std::to_string(n) + " fields, got " +
                              std::to_string(fields.size()));
        }
        for (int c = 0; c < n; ++c) {
            double v = 0.0;
            if (!detail::parse_double(detail::trim(fields[c]), v)) {
                throw parse_error("demand csv line " + std::to_string(li + 1) + " field " +
                                  std::to_string(c + 1) + ": not a number");
            }
            if (filled == c) {
                if (v != 0.0) {
                    throw parse_error("demand csv line " + std::to_string(li + 1) +
                                      ": diagonal entry must be zero");
                }
                continue;
            }
            if (v < 0.0) {
                throw parse_error("demand csv line " + std::to_string(li + 1) +
                                  ": negative demand");
            }
            m.demand_[filled][c] = v;
        }
        ++filled;
    }
    if (filled != n) {
        throw parse_error("demand csv: expected " + std::to_string(n) + " data rows, got " +
                          std::to_string(filled));
    }
    return m;
}

DemandMatrix DemandMatrix::from_csv_file(const std::string& path) {
    return from_csv(detail::read_text_file(path));
}

std::string DemandMatrix::to_csv() const {
    std::string out;
    for (int i = 0; i < n(); ++i) {
        if (i) out += ",";
        out += ids_[i];
    }
    out += "\n";
    for (int r = 0; r < n(); ++r) {
        for (int c = 0; c < n(); ++c) {
            if (c) out += ",";
            out += detail::format_number(demand_[r][c]);
        }
        out += "\n";
    }
    return out;
}

namespace {

void require_compatible(const TargetedFabric& fabric, const DemandMatrix& demand) {
    ValidationResult check = validate_plan(fabric);
    if (!check.ok()) {
        throw config_error("invalid fabric: " + check.violations.front().entity_id + ": " +
                           check.violations.front().message);
    }
    if (fabric.n_nodes != demand.n()) {
        throw config_error("demand matrix is " + std::to_string(demand.n()) +
                           " nodes wide but the fabric has " + std::to_string(fabric.n_nodes));
    }
}

// All maximal partial matchings over ordered pairs of n nodes: out-degree and
// in-degree at most one, no self-loops, and no pair can be added. A matching
// with m pairs leaves n-m sources and n-m destinations free, so it is maximal
// exactly when m = n, or m = n-1 and the one free source equals the one free
// destination. Counts per n: 1 for n=2, 5 for n=3, 17 for n=4.
std::vector<std::vector<std::pair<int, int>>> maximal_matchings(int n) {
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<int> dest_of(n, -1);
    std::vector<bool> dest_used(n, false);

    auto emit_if_maximal = [&]() {
        int free_src = -1;
        int free_dst = -1;
        int free_count = 0;
        for (int s = 0; s < n; ++s) {
            if (dest_of[s] < 0) {
                free_src = s;
                ++free_count;
            }
        }
        for (int d = 0; d < n; ++d) {
            if (!dest_used[d]) free_dst = d;
        }
        if (free_count > 1) return;
        if (free_count == 1 && free_src != free_dst) return;
        std::vector<std::pair<int, int>> pairs;
        for (int s = 0; s < n; ++s) {
            if (dest_of[s] >= 0) pairs.push_back({s, dest_of[s]});
        }
        out.push_back(std::move(pairs));
    };

    auto rec = [&](auto&& self, int s) -> void {
        if (s == n) {
            emit_if_maximal();
            return;
        }
        for (int d = 0; d < n; ++d) {
            if (d == s || dest_used[d]) continue;
            dest_of[s] = d;
            dest_used[d] = true;
            self(self, s + 1);
            dest_used[d] = false;
            dest_of[s] = -1;
        }
        self(self, s + 1);
    };
    rec(rec, 0);
    return out;
}

class ExactTargetedSearch {
public:
    ExactTargetedSearch(const TargetedFabric& fabric, const DemandMatrix& demand)
        : fabric_(fabric), demand_(demand), n_(demand.n()),
          matchings_(maximal_matchings(n_)), slots_(2 * fabric.t_per_interface),
          carried_(n_, std::vector<double>(n_, 0.0)) {}

    ThroughputReport run() {
        per_slot_bound_ = 0.0;
        for (const auto& m : matchings_) per_slot_bound_ = std::max(per_slot_bound_, gain(m));
        pick_.assign(slots_, 0);
        dfs(0, 0, 0.0);

        ThroughputReport report;
        report.optimal = true;
        report.carried.assign(n_, std::vector<double>(n_, 0.0));
        std::vector<int> wavelengths = fabric_.plan.all_sorted();
        for (int slot = 0; slot < slots_; ++slot) {
            for (auto [s, d] : matchings_[best_pick_[slot]]) {
                double g = std::min(fabric_.rate_gbps,
                                    std::max(0.0, demand_.at(s, d) - report.carried[s][d]));
                if (g <= 0.0) continue;
                report.carried[s][d] += g;
                report.carried_total += g;
                report.schedule.push_back({wavelengths[slot], s, d, g});
            }
        }
        return report;
    }

private:
    double gain(const std::vector<std::pair<int, int>>& matching) const {
        double total = 0.0;
        for (auto [s, d] : matching) {
            total += std::min(fabric_.rate_gbps, std::max(0.0, demand_.at(s, d) - carried_[s][d]));
        }
        return total;
    }

    // Slots are interchangeable, so multisets of matchings are enumerated
    // with a non-decreasing matching index.
    void dfs(int slot, int from, double total) {
        if (slot == slots_) {
            if (!has_best_ || total > best_total_) {
                has_best_ = true;
                best_total_ = total;
                best_pick_ = pick_;
            }
            return;
        }
        if (has_best_ && total + (slots_ - slot) * per_slot_bound_ <= best_total_) return;
        for (int mi = from; mi < static_cast<int>(matchings_.size()); ++mi) {
            std::vector<double> steps;
            double g = 0.0;
            for (auto [s, d] : matchings_[mi]) {
                double step = std::min(fabric_.rate_gbps,
                                       std::max(0.0, demand_.at(s, d) - carried_[s][d]));
                carried_[s][d] += step;
                steps.push_back(step);
                g += step;
            }
            pick_[slot] = mi;
            dfs(slot + 1, mi, total + g);
            for (std::size_t i = 0; i < matchings_[mi].size(); ++i) {
                auto [s, d] = matchings_[mi][i];
                carried_[s][d] -= steps[i];
            }
        }
    }

    const TargetedFabric& fabric_;
    const DemandMatrix& demand_;
    int n_ = 0;
    std::vector<std::vector<std::pair<int, int>>> matchings_;
    int slots_ = 0;
    std::vector<std::vector<double>> carried_;
    std::vector<int> pick_;
    std::vector<int> best_pick_;
    bool has_best_ = false;
    double best_total_ = 0.0;
    double per_slot_bound_ = 0.0;
};

} // namespace

ThroughputReport max_throughput_targeted(const TargetedFabric& fabric,
                                         const DemandMatrix& demand) {
    require_compatible(fabric, demand);
    const int n = demand.n();
    if (n <= kFabricExactMaxNodes && fabric.t_per_interface <= kFabricExactMaxT) {
        ExactTargetedSearch search(fabric, demand);
        return search.run();
    }

    // One max-weight matching per wavelength on the residual demand. The
    // diagonal stays at weight zero, so a perfect assignment is free to park
    // nodes on themselves; its off-diagonal pairs form the scheduled matching.
    ThroughputReport report;
    report.optimal = false;
    report.carried.assign(n, std::vector<double>(n, 0.0));
    for (int wavelength : fabric.plan.all_sorted()) {
        std::vector<std::vector<double>> weight(n, std::vector<double>(n, 0.0));
        for (int s = 0; s < n; ++s) {
            for (int d = 0; d < n; ++d) {
                if (s == d) continue;
                weight[s][d] = std::min(fabric.rate_gbps,
                                        std::max(0.0, demand.at(s, d) - report.carried[s][d]));
            }
        }
        std::vector<int> match = detail::max_weight_assignment(weight);
        for (int s = 0; s < n; ++s) {
            int d = match[s];
            if (d == s || weight[s][d] <= 0.0) continue;
            report.carried[s][d] += weight[s][d];
            report.carried_total += weight[s][d];
            report.schedule.push_back({wavelength, s, d, weight[s][d]});
        }
    }
    return report;
}

ThroughputReport max_throughput_generic(const GenericFabric& fabric, const DemandMatrix& demand) {
    if (fabric.n_nodes != demand.n()) {
        throw config_error("demand matrix is " + std::to_string(demand.n()) +
                           " nodes wide but the fabric has " + std::to_string(fabric.n_nodes));
    }
    if (!(fabric.link_capacity_gbps > 0.0)) {
        throw config_error("generic link capacity must be positive");
    }
    const int n = demand.n();
    ThroughputReport report;
    report.optimal = true;
    report.carried.assign(n, std::vector<double>(n, 0.0));
    for (int s = 0; s < n; ++s) {
        for (int d = 0; d < n; ++d) {
            if (s == d) continue;
            report.carried[s][d] = std::min(demand.at(s, d), fabric.link_capacity_gbps);
            report.carried_total += report.carried[s][d];
        }
    }
    return report;
}

std::string throughput_to_json(const ThroughputReport& report, const DemandMatrix& demand,
                               const std::string& design) {
    nlohmann::ordered_json j;
    j["design"] = design;
    j["nodes"] = demand.ids();
    j["carried_gbps_total"] = report.carried_total;
    j["optimal"] = report.optimal;
    j["carried"] = report.carried;
    j["schedule"] = nlohmann::ordered_json::array();
    for (const ScheduleEntry& e : report.schedule) {
        nlohmann::ordered_json entry;
        entry["wavelength"] = e.wavelength;
        entry["source"] = demand.ids()[e.source];
        entry["dest"] = demand.ids()[e.dest];
        entry["gbps"] = e.gbps;
        j["schedule"].push_back(std::move(entry));
    }
    return j.dump(2) + "\n";
}

std::string schedule_to_csv(const ThroughputReport& report, const DemandMatrix& demand) {
    std::string out = "wavelength,source,dest,gbps\n";
    for (const ScheduleEntry& e : report.schedule) {
        out += std::to_string(e.wavelength) + "," + demand.ids()[e.source] + "," +
               demand.ids()[e.dest] + "," + detail::format_number(e.gbps) + "\n";
    }
    return out;
}

} // namespace compdc
