#include "compdc/composer.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>

#include <json.hpp>

#include "compdc/errors.hpp"
#include "detail/bipartite.hpp"
#include "detail/text.hpp"

namespace compdc {
namespace {

constexpr int kKinds = 3;

int kind_index(ResourceKind kind) { return static_cast<int>(kind); }

constexpr std::array<ResourceKind, kKinds> kAllKinds = {
    ResourceKind::Cpu, ResourceKind::Ram, ResourceKind::Storage};

} // namespace

std::string to_string(RejectReason reason) {
    return reason == RejectReason::Capacity ? "capacity" : "scope";
}

DcView DcView::build(const DataCenter& dc, const DisaggregationConfig& config) {
    ValidationResult check = validate_dc(dc, config);
    if (!check.ok()) {
        std::string msg = "invalid scenario: " + check.violations.front().entity_id + ": " +
                          check.violations.front().message;
        if (check.violations.size() > 1) {
            msg += " (and " + std::to_string(check.violations.size() - 1) + " more)";
        }
        throw config_error(msg);
    }

    DcView view;
    view.config_ = config;
    view.dc_group_ = {Scope::Dc, "dc", {}};
    int node_flat = 0;
    int rack_flat = 0;
    for (std::size_t p = 0; p < dc.pods.size(); ++p) {
        const Pod& pod = dc.pods[p];
        EntityGroup pod_group{Scope::Pod, pod.id, {}};
        for (std::size_t r = 0; r < pod.racks.size(); ++r) {
            const Rack& rack = pod.racks[r];
            EntityGroup rack_group{Scope::Rack, pod_group.path + "/" + rack.id, {}};
            for (std::size_t n = 0; n < rack.nodes.size(); ++n) {
                const Node& node = rack.nodes[n];
                EntityGroup node_group{Scope::Node, rack_group.path + "/" + node.id, {}};
                Scope scope = utilization_scope(node, config);
                for (std::size_t c = 0; c < node.components.size(); ++c) {
                    Component comp;
                    comp.ref = {static_cast<int>(p), static_cast<int>(r), static_cast<int>(n),
                                static_cast<int>(c)};
                    comp.kind = node.components[c].kind;
                    comp.capacity = node.components[c].capacity;
                    comp.scope = scope;
                    comp.node_flat = node_flat;
                    comp.rack_flat = rack_flat;
                    comp.pod_flat = static_cast<int>(p);
                    comp.node_id = node.id;
                    comp.path = node_group.path + "[" + std::to_string(c) + "]";
                    int idx = static_cast<int>(view.components_.size());
                    node_group.comps.push_back(idx);
                    rack_group.comps.push_back(idx);
                    pod_group.comps.push_back(idx);
                    view.dc_group_.comps.push_back(idx);
                    view.components_.push_back(std::move(comp));
                }
                view.nodes_.push_back(std::move(node_group));
                ++node_flat;
            }
            view.racks_.push_back(std::move(rack_group));
            ++rack_flat;
        }
        view.pods_.push_back(std::move(pod_group));
    }

    view.canonical_order_.resize(view.components_.size());
    for (std::size_t i = 0; i < view.components_.size(); ++i) {
        view.canonical_order_[i] = static_cast<int>(i);
    }
    std::sort(view.canonical_order_.begin(), view.canonical_order_.end(), [&](int a, int b) {
        const Component& ca = view.components_[a];
        const Component& cb = view.components_[b];
        if (ca.node_id != cb.node_id) return ca.node_id < cb.node_id;
        if (ca.ref.component != cb.ref.component) return ca.ref.component < cb.ref.component;
        return a < b;
    });
    return view;
}

std::vector<int> DcView::capacities() const {
    std::vector<int> caps(components_.size(), 0);
    for (std::size_t i = 0; i < components_.size(); ++i) caps[i] = components_[i].capacity;
    return caps;
}

int DcView::flat_index(const ComponentRef& ref) const {
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (components_[i].ref == ref) return static_cast<int>(i);
    }
    throw config_error("component reference does not exist in this data center view");
}

Scope DcView::span_level(const std::vector<Assignment>& assignments) const {
    if (assignments.empty()) return Scope::Node;
    const Component& first = components_[flat_index(assignments.front().component)];
    Scope span = Scope::Node;
    for (const Assignment& a : assignments) {
        const Component& c = components_[flat_index(a.component)];
        if (c.pod_flat != first.pod_flat) return Scope::Dc;
        if (c.rack_flat != first.rack_flat) span = std::max(span, Scope::Pod);
        else if (c.node_flat != first.node_flat) span = std::max(span, Scope::Rack);
    }
    return span;
}

std::string DcView::entity_path(const std::vector<Assignment>& assignments) const {
    if (assignments.empty()) return "dc";
    Scope span = span_level(assignments);
    const Component& first = components_[flat_index(assignments.front().component)];
    switch (span) {
        case Scope::Node: return nodes_[first.node_flat].path;
        case Scope::Rack: return racks_[first.rack_flat].path;
        case Scope::Pod: return pods_[first.pod_flat].path;
        case Scope::Dc: return "dc";
    }
    return "dc";
}

namespace {

// One candidate hosting entity for an app: its level plus the usable
// components per kind (positive capacity, utilization scope covering the
// entity level), in canonical order.
struct Choice {
    Scope level = Scope::Node;
    const DcView::EntityGroup* group = nullptr;
    std::array<std::vector<int>, kKinds> comps;
    std::array<long long, kKinds> cap_total{};
};

// Entity candidates for an app with the dominance reduction applied:
// utilization scopes never sit at node level (physical scales start at the
// rack, logical composition spans the data center), so every component
// reachable inside a node is reachable across its whole rack. For apps whose
// latency scope admits rack entities, rack choices therefore subsume node
// choices and nodes are skipped.
std::vector<Choice> build_choices(const AppTemplate& app, const DcView& view) {
    std::vector<int> rank(view.components().size(), 0);
    for (std::size_t pos = 0; pos < view.canonical_order().size(); ++pos) {
        rank[view.canonical_order()[pos]] = static_cast<int>(pos);
    }

    std::vector<const DcView::EntityGroup*> candidates;
    if (app.latency_scope == Scope::Node) {
        for (const auto& g : view.nodes()) candidates.push_back(&g);
    } else {
        for (const auto& g : view.racks()) candidates.push_back(&g);
        if (app.latency_scope >= Scope::Pod) {
            for (const auto& g : view.pods()) candidates.push_back(&g);
        }
        if (app.latency_scope >= Scope::Dc) candidates.push_back(&view.dc_group());
    }

    std::vector<Choice> choices;
    std::set<std::array<std::vector<int>, kKinds>> seen;
    for (const DcView::EntityGroup* group : candidates) {
        Choice ch;
        ch.level = group->level;
        ch.group = group;
        for (int idx : group->comps) {
            const DcView::Component& comp = view.components()[idx];
            if (comp.capacity <= 0 || comp.scope < group->level) continue;
            ch.comps[kind_index(comp.kind)].push_back(idx);
            ch.cap_total[kind_index(comp.kind)] += comp.capacity;
        }
        for (auto& list : ch.comps) {
            std::sort(list.begin(), list.end(), [&](int a, int b) { return rank[a] < rank[b]; });
        }
        if (!seen.insert(ch.comps).second) continue;
        choices.push_back(std::move(ch));
    }
    return choices;
}

bool choice_fits_statically(const AppTemplate& app, const Choice& ch) {
    for (ResourceKind kind : kAllKinds) {
        if (app.demand(kind) > ch.cap_total[kind_index(kind)]) return false;
    }
    return true;
}

} // namespace

Feasibility check_feasible(const AppTemplate& app, const DcView& view,
                           const std::vector<int>& residual) {
    for (const Choice& ch : build_choices(app, view)) {
        bool fits = true;
        for (ResourceKind kind : kAllKinds) {
            int need = app.demand(kind);
            if (need == 0) continue;
            long long avail = 0;
            for (int idx : ch.comps[kind_index(kind)]) avail += residual[idx];
            if (avail < need) {
                fits = false;
                break;
            }
        }
        if (!fits) continue;

        Allocation alloc;
        alloc.app = app.name;
        for (ResourceKind kind : kAllKinds) {
            int need = app.demand(kind);
            for (int idx : ch.comps[kind_index(kind)]) {
                if (need == 0) break;
                int take = std::min(residual[idx], need);
                if (take <= 0) continue;
                alloc.assignments.push_back({view.components()[idx].ref, kind, take});
                need -= take;
            }
        }
        Feasibility result;
        result.witness = std::move(alloc);
        return result;
    }

    Feasibility result;
    for (ResourceKind kind : kAllKinds) {
        int need = app.demand(kind);
        if (need == 0) continue;
        long long total = 0;
        for (std::size_t i = 0; i < view.components().size(); ++i) {
            if (view.components()[i].kind == kind) total += residual[i];
        }
        if (total < need) {
            result.reason = RejectReason::Capacity;
            result.detail = "total " + std::string(to_string(kind)) + " capacity " +
                            std::to_string(total) + " is below the demanded " +
                            std::to_string(need) + " units";
            return result;
        }
    }
    result.reason = RejectReason::Scope;
    result.detail = std::string("no single entity within latency scope '") +
                    to_string(app.latency_scope) +
                    "' can supply cpu=" + std::to_string(app.cpu_units) +
                    ", ram=" + std::to_string(app.ram_units) +
                    ", storage=" + std::to_string(app.storage_units);
    return result;
}

namespace {

PlacementReport place_greedy(const WorkloadSet& ws, const DcView& view, bool mark_heuristic) {
    const std::size_t n = ws.apps.size();
    std::vector<int> caps = view.capacities();
    std::vector<int> residual = caps;

    std::vector<int> order(n);
    for (std::size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        if (ws.apps[a].total_units() != ws.apps[b].total_units()) {
            return ws.apps[a].total_units() > ws.apps[b].total_units();
        }
        if (ws.apps[a].name != ws.apps[b].name) return ws.apps[a].name < ws.apps[b].name;
        return a < b;
    });

    std::vector<std::optional<Allocation>> allocs(n);
    std::vector<std::optional<Rejection>> rejections(n);
    for (int i : order) {
        const AppTemplate& app = ws.apps[i];
        Feasibility f = check_feasible(app, view, residual);
        if (f.feasible()) {
            for (const Assignment& a : f.witness->assignments) {
                residual[view.flat_index(a.component)] -= a.units;
            }
            allocs[i] = std::move(*f.witness);
        } else {
            rejections[i] = Rejection{app.name, f.reason, f.detail};
        }
    }

    PlacementReport report;
    for (std::size_t i = 0; i < n; ++i) {
        if (allocs[i]) report.accepted.push_back(std::move(*allocs[i]));
        else report.rejected.push_back(std::move(*rejections[i]));
    }
    for (std::size_t j = 0; j < caps.size(); ++j) {
        if (residual[j] < caps[j]) ++report.active_components;
    }
    report.heuristic = mark_heuristic;
    return report;
}

// Exact lexicographic search: branch over accept/reject and entity choices
// per app, keep joint feasibility via max-flow, and evaluate accepted leaves
// by the minimum number of components that can host the committed demands.
class ExactSolver {
public:
    ExactSolver(const WorkloadSet& ws, const DcView& view) : ws_(ws), view_(view) {
        const std::size_t n = ws.apps.size();
        order_.resize(n);
        for (std::size_t i = 0; i < n; ++i) order_[i] = static_cast<int>(i);
        std::sort(order_.begin(), order_.end(), [&](int a, int b) {
            if (ws_.apps[a].name != ws_.apps[b].name) return ws_.apps[a].name < ws_.apps[b].name;
            return a < b;
        });

        for (int idx : view.canonical_order()) {
            const DcView::Component& comp = view.components()[idx];
            if (comp.capacity <= 0) continue;
            int k = kind_index(comp.kind);
            col_of_[idx] = static_cast<int>(kind_comps_[k].size());
            kind_comps_[k].push_back(idx);
            kind_caps_[k].push_back(comp.capacity);
        }

        choices_.resize(n);
        for (std::size_t pos = 0; pos < n; ++pos) {
            const AppTemplate& app = ws_.apps[order_[pos]];
            for (Choice& ch : build_choices(app, view_)) {
                if (choice_fits_statically(app, ch)) choices_[pos].push_back(std::move(ch));
            }
        }
        chosen_.assign(n, -1);
    }

    PlacementReport solve() {
        PlacementReport seed = place_greedy(ws_, view_, false);
        best_accepted_ = static_cast<int>(seed.accepted.size());
        if (!ws_.apps.empty()) dfs(0);
        return reconstruct();
    }

private:
    struct KindInstance {
        std::vector<int> demands;
        std::vector<std::vector<int>> allowed;  // columns within the kind
        std::vector<std::uint32_t> masks;
    };

    KindInstance committed_instance(int kind) const {
        KindInstance inst;
        for (std::size_t pos = 0; pos < chosen_.size(); ++pos) {
            if (chosen_[pos] < 0) continue;
            const AppTemplate& app = ws_.apps[order_[pos]];
            int need = app.demand(kAllKinds[kind]);
            if (need == 0) continue;
            const Choice& ch = choices_[pos][chosen_[pos]];
            std::vector<int> cols;
            std::uint32_t mask = 0;
            for (int idx : ch.comps[kind]) {
                int col = col_of_.at(idx);
                cols.push_back(col);
                mask |= (1u << col);
            }
            inst.demands.push_back(need);
            inst.allowed.push_back(std::move(cols));
            inst.masks.push_back(mask);
        }
        return inst;
    }

    bool feasible_now() const {
        for (int k = 0; k < kKinds; ++k) {
            KindInstance inst = committed_instance(k);
            if (inst.demands.empty()) continue;
            if (!detail::flow_feasible(inst.demands, kind_caps_[k], inst.allowed)) return false;
        }
        return true;
    }

    // Minimum number of kind-k components that can absorb the committed
    // demands, with the canonical-first subset of that size. Assumes the
    // committed instance is feasible against the full capacity vector.
    std::pair<int, std::uint32_t> min_cover(int kind) {
        KindInstance inst = committed_instance(kind);
        if (inst.demands.empty()) return {0, 0};

        std::vector<std::pair<int, std::uint32_t>> key(inst.demands.size());
        for (std::size_t i = 0; i < inst.demands.size(); ++i) {
            key[i] = {inst.demands[i], inst.masks[i]};
        }
        std::sort(key.begin(), key.end());
        auto memo = cover_memo_[kind].find(key);
        if (memo != cover_memo_[kind].end()) return memo->second;

        std::uint32_t union_mask = 0;
        for (std::uint32_t m : inst.masks) union_mask |= m;
        std::vector<int> cols;
        long long total = 0;
        for (int c = 0; c < static_cast<int>(kind_caps_[kind].size()); ++c) {
            if (union_mask & (1u << c)) cols.push_back(c);
        }
        for (int d : inst.demands) total += d;

        std::vector<int> caps_desc;
        for (int c : cols) caps_desc.push_back(kind_caps_[kind][c]);
        std::sort(caps_desc.begin(), caps_desc.end(), std::greater<int>());
        int lower = 0;
        long long covered = 0;
        while (lower < static_cast<int>(caps_desc.size()) && covered < total) {
            covered += caps_desc[lower];
            ++lower;
        }

        std::pair<int, std::uint32_t> result{static_cast<int>(cols.size()), union_mask};
        for (int size = lower; size <= static_cast<int>(cols.size()); ++size) {
            std::uint32_t found = first_feasible_subset(inst, cols, size, kind);
            if (found != 0 || size == 0) {
                result = {size, found};
                break;
            }
        }
        cover_memo_[kind][key] = result;
        return result;
    }

    std::uint32_t first_feasible_subset(const KindInstance& inst, const std::vector<int>& cols,
                                        int size, int kind) const {
        if (size == 0) return 0;
        const int m = static_cast<int>(cols.size());
        if (size > m) return 0;
        std::vector<int> pick(size);
        for (int i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            std::uint32_t subset = 0;
            for (int i : pick) subset |= (1u << cols[i]);
            std::vector<int> caps_sub = kind_caps_[kind];
            for (int c = 0; c < static_cast<int>(caps_sub.size()); ++c) {
                if (!(subset & (1u << c))) caps_sub[c] = 0;
            }
            if (detail::flow_feasible(inst.demands, caps_sub, inst.allowed)) return subset;

            int i = size - 1;
            while (i >= 0 && pick[i] == m - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
        return 0;
    }

    void leaf() {
        int count = committed_;
        if (count < best_accepted_) return;

        std::vector<std::string> names;
        for (std::size_t pos = 0; pos < chosen_.size(); ++pos) {
            if (chosen_[pos] >= 0) names.push_back(ws_.apps[order_[pos]].name);
        }
        int active = 0;
        std::array<std::uint32_t, kKinds> masks{};
        for (int k = 0; k < kKinds; ++k) {
            auto [size, mask] = min_cover(k);
            active += size;
            masks[k] = mask;
        }

        bool better = false;
        if (count > best_accepted_) better = true;
        else if (!has_best_) better = true;
        else if (active < best_active_) better = true;
        else if (active == best_active_ && names < best_names_) better = true;
        if (!better) return;

        has_best_ = true;
        best_accepted_ = count;
        best_active_ = active;
        best_names_ = std::move(names);
        best_masks_ = masks;
        best_picks_.clear();
        for (std::size_t pos = 0; pos < chosen_.size(); ++pos) {
            if (chosen_[pos] >= 0) best_picks_.push_back({static_cast<int>(pos), chosen_[pos]});
        }
    }

    void dfs(std::size_t pos) {
        if (pos == chosen_.size()) {
            leaf();
            return;
        }
        if (committed_ + static_cast<int>(chosen_.size() - pos) < best_accepted_) return;

        for (std::size_t ci = 0; ci < choices_[pos].size(); ++ci) {
            chosen_[pos] = static_cast<int>(ci);
            ++committed_;
            if (feasible_now()) dfs(pos + 1);
            --committed_;
            chosen_[pos] = -1;
        }
        dfs(pos + 1);
    }

    // Turns the best leaf into concrete unit assignments: apps in name order
    // take the most they can from the earliest canonical component while a
    // flow probe confirms the rest stays feasible inside the chosen cover.
    PlacementReport reconstruct() {
        const std::size_t n = ws_.apps.size();
        std::vector<std::optional<Allocation>> allocs(n);

        if (has_best_) {
            for (auto [pos, ci] : best_picks_) {
                Allocation alloc;
                alloc.app = ws_.apps[order_[pos]].name;
                allocs[order_[pos]] = std::move(alloc);
            }
            for (int k = 0; k < kKinds; ++k) extract_kind(k, allocs);
        }

        PlacementReport report;
        std::vector<int> accepted_app(n, 0);
        for (auto [pos, ci] : best_picks_) accepted_app[order_[pos]] = 1;
        std::vector<int> full = view_.capacities();
        for (std::size_t i = 0; i < n; ++i) {
            if (has_best_ && accepted_app[i]) {
                report.accepted.push_back(std::move(*allocs[i]));
                continue;
            }
            Feasibility f = check_feasible(ws_.apps[i], view_, full);
            if (f.feasible()) {
                report.rejected.push_back(
                    {ws_.apps[i].name, RejectReason::Capacity,
                     "insufficient residual capacity alongside the accepted applications"});
            } else {
                report.rejected.push_back({ws_.apps[i].name, f.reason, f.detail});
            }
        }
        report.active_components = has_best_ ? best_active_ : 0;
        report.heuristic = false;
        return report;
    }

    void extract_kind(int kind, std::vector<std::optional<Allocation>>& allocs) {
        struct Entry {
            int pos = 0;
            int need = 0;
            std::vector<int> allowed;  // columns inside the chosen cover
        };
        std::vector<Entry> entries;
        for (auto [pos, ci] : best_picks_) {
            const AppTemplate& app = ws_.apps[order_[pos]];
            int need = app.demand(kAllKinds[kind]);
            if (need == 0) continue;
            Entry e;
            e.pos = pos;
            e.need = need;
            for (int idx : choices_[pos][ci].comps[kind]) {
                int col = col_of_.at(idx);
                if (best_masks_[kind] & (1u << col)) e.allowed.push_back(col);
            }
            entries.push_back(std::move(e));
        }
        if (entries.empty()) return;

        std::vector<int> residual = kind_caps_[kind];
        for (int c = 0; c < static_cast<int>(residual.size()); ++c) {
            if (!(best_masks_[kind] & (1u << c))) residual[c] = 0;
        }

        auto rest_feasible = [&](std::size_t at, int need, std::size_t next_col,
                                 const std::vector<int>& res) {
            std::vector<int> demands;
            std::vector<std::vector<int>> allowed;
            if (need > 0) {
                demands.push_back(need);
                allowed.emplace_back(entries[at].allowed.begin() +
                                         static_cast<std::ptrdiff_t>(next_col),
                                     entries[at].allowed.end());
            }
            for (std::size_t j = at + 1; j < entries.size(); ++j) {
                demands.push_back(entries[j].need);
                allowed.push_back(entries[j].allowed);
            }
            return detail::flow_feasible(demands, res, allowed);
        };

        for (std::size_t i = 0; i < entries.size(); ++i) {
            int need = entries[i].need;
            for (std::size_t j = 0; j < entries[i].allowed.size() && need > 0; ++j) {
                int col = entries[i].allowed[j];
                int high = std::min(residual[col], need);
                for (int take = high; take >= 0; --take) {
                    std::vector<int> res = residual;
                    res[col] -= take;
                    if (!rest_feasible(i, need - take, j + 1, res)) continue;
                    residual[col] -= take;
                    need -= take;
                    if (take > 0) {
                        int flat = kind_comps_[kind][col];
                        allocs[order_[entries[i].pos]]->assignments.push_back(
                            {view_.components()[flat].ref, kAllKinds[kind], take});
                    }
                    break;
                }
            }
        }
    }

    const WorkloadSet& ws_;
    const DcView& view_;
    std::vector<int> order_;
    std::vector<std::vector<Choice>> choices_;
    std::array<std::vector<int>, kKinds> kind_comps_;
    std::array<std::vector<int>, kKinds> kind_caps_;
    std::map<int, int> col_of_;
    std::vector<int> chosen_;
    int committed_ = 0;

    bool has_best_ = false;
    int best_accepted_ = 0;
    int best_active_ = 0;
    std::vector<std::string> best_names_;
    std::vector<std::pair<int, int>> best_picks_;
    std::array<std::uint32_t, kKinds> best_masks_{};
    std::array<std::map<std::vector<std::pair<int, std::uint32_t>>, std::pair<int, std::uint32_t>>,
               kKinds>
        cover_memo_;
};

} // namespace

bool exceeds_exact_bounds(const WorkloadSet& workloads, const DataCenter& dc) {
    int comps = 0;
    for (const Pod& pod : dc.pods) {
        for (const Rack& rack : pod.racks) {
            for (const Node& node : rack.nodes) comps += static_cast<int>(node.components.size());
        }
    }
    return comps > kExactMaxComponents ||
           static_cast<int>(workloads.apps.size()) > kExactMaxApps;
}

PlacementReport place_all(const WorkloadSet& workloads, const DataCenter& dc,
                          const DisaggregationConfig& config) {
    DcView view = DcView::build(dc, config);
    if (exceeds_exact_bounds(workloads, dc)) return place_greedy(workloads, view, true);
    ExactSolver solver(workloads, view);
    return solver.solve();
}

std::string report_to_json(const PlacementReport& report, const DcView& view) {
    nlohmann::ordered_json j;
    j["accepted"] = nlohmann::ordered_json::array();
    for (const Allocation& alloc : report.accepted) {
        nlohmann::ordered_json a;
        a["app"] = alloc.app;
        a["entity_path"] = view.entity_path(alloc.assignments);
        a["assignments"] = nlohmann::ordered_json::array();
        for (const Assignment& as : alloc.assignments) {
            nlohmann::ordered_json one;
            one["component"] = view.components()[view.flat_index(as.component)].path;
            one["kind"] = to_string(as.kind);
            one["units"] = as.units;
            a["assignments"].push_back(std::move(one));
        }
        j["accepted"].push_back(std::move(a));
    }
    j["rejected"] = nlohmann::ordered_json::array();
    for (const Rejection& rej : report.rejected) {
        nlohmann::ordered_json r;
        r["app"] = rej.app;
        r["reason"] = to_string(rej.reason);
        r["detail"] = rej.detail;
        j["rejected"].push_back(std::move(r));
    }
    j["active_components"] = report.active_components;
    j["heuristic"] = report.heuristic;
    return j.dump(2) + "\n";
}

std::string report_to_csv(const PlacementReport& report, const DcView& view) {
    std::string out = "app,status,reason,entity_path\n";
    for (const Allocation& alloc : report.accepted) {
        out += alloc.app + ",accepted,," + view.entity_path(alloc.assignments) + "\n";
    }
    for (const Rejection& rej : report.rejected) {
        out += rej.app + ",rejected," + to_string(rej.reason) + ",\n";
    }
    return out;
}

} // namespace compdc
