#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <set>

#include "compdc/composer.hpp"
#include "compdc/errors.hpp"
#include "detail/bipartite.hpp"

// Exhaustive reference solver. Everything here is kept separate from the
// production search on purpose: entity choices are enumerated without the
// rack-dominates-node reduction, and feasibility runs on unit-expansion
// matching instead of max-flow.

namespace compdc {
namespace {

constexpr int kKinds = 3;

constexpr std::array<ResourceKind, kKinds> kAllKinds = {
    ResourceKind::Cpu, ResourceKind::Ram, ResourceKind::Storage};

struct RawChoice {
    std::array<std::vector<int>, kKinds> comps;  // flat indices, canonical order
};

class OracleSolver {
public:
    OracleSolver(const WorkloadSet& ws, const DcView& view) : ws_(ws), view_(view) {
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
            int k = static_cast<int>(comp.kind);
            col_of_[idx] = static_cast<int>(kind_cols_[k].size());
            kind_cols_[k].push_back(idx);
            kind_caps_[k].push_back(comp.capacity);
        }

        choices_.resize(n);
        for (std::size_t pos = 0; pos < n; ++pos) {
            choices_[pos] = raw_choices(ws_.apps[order_[pos]]);
        }
    }

    PlacementReport solve() {
        const int n = static_cast<int>(ws_.apps.size());
        for (int size = n; size >= 0; --size) {
            found_for_size_ = false;
            std::vector<int> subset;
            enumerate_subsets(0, size, subset);
            if (found_for_size_) break;
        }
        return build_report();
    }

private:
    // Every entity whose level is within the app's latency scope, keeping
    // components that cover the entity level. No dominance reduction; only
    // exact-duplicate choices and choices too small for the app alone drop.
    std::vector<RawChoice> raw_choices(const AppTemplate& app) const {
        std::vector<std::pair<Scope, const DcView::EntityGroup*>> groups;
        for (const auto& g : view_.nodes()) groups.push_back({Scope::Node, &g});
        if (app.latency_scope >= Scope::Rack) {
            for (const auto& g : view_.racks()) groups.push_back({Scope::Rack, &g});
        }
        if (app.latency_scope >= Scope::Pod) {
            for (const auto& g : view_.pods()) groups.push_back({Scope::Pod, &g});
        }
        if (app.latency_scope >= Scope::Dc) groups.push_back({Scope::Dc, &view_.dc_group()});

        std::vector<int> rank(view_.components().size(), 0);
        for (std::size_t pos = 0; pos < view_.canonical_order().size(); ++pos) {
            rank[view_.canonical_order()[pos]] = static_cast<int>(pos);
        }

        std::vector<RawChoice> out;
        std::set<std::array<std::vector<int>, kKinds>> seen;
        for (auto [level, group] : groups) {
            RawChoice ch;
            std::array<long long, kKinds> totals{};
            for (int idx : group->comps) {
                const DcView::Component& comp = view_.components()[idx];
                if (comp.capacity <= 0 || comp.scope < level) continue;
                ch.comps[static_cast<int>(comp.kind)].push_back(idx);
                totals[static_cast<int>(comp.kind)] += comp.capacity;
            }
            for (auto& list : ch.comps) {
                std::sort(list.begin(), list.end(),
                          [&](int a, int b) { return rank[a] < rank[b]; });
            }
            bool fits = true;
            for (ResourceKind kind : kAllKinds) {
                if (app.demand(kind) > totals[static_cast<int>(kind)]) fits = false;
            }
            if (!fits) continue;
            if (!seen.insert(ch.comps).second) continue;
            out.push_back(std::move(ch));
        }
        return out;
    }

    void enumerate_subsets(int from, int remaining, std::vector<int>& subset) {
        if (remaining == 0) {
            try_subset(subset);
            return;
        }
        const int n = static_cast<int>(ws_.apps.size());
        for (int p = from; p + remaining <= n; ++p) {
            subset.push_back(p);
            enumerate_subsets(p + 1, remaining - 1, subset);
            subset.pop_back();
        }
    }

    void try_subset(const std::vector<int>& subset) {
        picks_.assign(subset.size(), -1);
        subset_ = &subset;
        subset_best_active_ = -1;
        tuple_dfs(0);
        if (subset_best_active_ < 0) return;

        bool better = false;
        if (!found_for_size_) better = true;
        else if (subset_best_active_ < best_active_) better = true;
        if (!better) return;

        found_for_size_ = true;
        best_active_ = subset_best_active_;
        best_subset_ = subset;
        best_picks_ = subset_best_picks_;
        best_masks_ = subset_best_masks_;
    }

    bool committed_feasible(const std::vector<int>& subset, int upto) const {
        for (int k = 0; k < kKinds; ++k) {
            std::vector<int> demands;
            std::vector<std::vector<int>> allowed;
            for (int i = 0; i <= upto; ++i) {
                const AppTemplate& app = ws_.apps[order_[subset[i]]];
                int need = app.demand(kAllKinds[k]);
                if (need == 0) continue;
                std::vector<int> cols;
                for (int idx : choices_[subset[i]][picks_[i]].comps[k]) {
                    cols.push_back(col_of_.at(idx));
                }
                demands.push_back(need);
                allowed.push_back(std::move(cols));
            }
            if (demands.empty()) continue;
            if (!detail::unit_matching_feasible(demands, kind_caps_[k], allowed)) return false;
        }
        return true;
    }

    void tuple_dfs(std::size_t at) {
        const std::vector<int>& subset = *subset_;
        if (at == subset.size()) {
            int active = 0;
            std::array<std::uint32_t, kKinds> masks{};
            for (int k = 0; k < kKinds; ++k) {
                auto [size, mask] = min_cover(subset, k);
                active += size;
                masks[k] = mask;
            }
            if (subset_best_active_ < 0 || active < subset_best_active_) {
                subset_best_active_ = active;
                subset_best_picks_ = picks_;
                subset_best_masks_ = masks;
            }
            return;
        }
        for (std::size_t ci = 0; ci < choices_[subset[at]].size(); ++ci) {
            picks_[at] = static_cast<int>(ci);
            if (committed_feasible(subset, static_cast<int>(at))) tuple_dfs(at + 1);
            picks_[at] = -1;
        }
    }

    std::pair<int, std::uint32_t> min_cover(const std::vector<int>& subset, int kind) {
        std::vector<int> demands;
        std::vector<std::vector<int>> allowed;
        std::vector<std::uint32_t> masks;
        for (std::size_t i = 0; i < subset.size(); ++i) {
            const AppTemplate& app = ws_.apps[order_[subset[i]]];
            int need = app.demand(kAllKinds[kind]);
            if (need == 0) continue;
            std::vector<int> cols;
            std::uint32_t mask = 0;
            for (int idx : choices_[subset[i]][picks_[i]].comps[kind]) {
                int col = col_of_.at(idx);
                cols.push_back(col);
                mask |= (1u << col);
            }
            demands.push_back(need);
            allowed.push_back(std::move(cols));
            masks.push_back(mask);
        }
        if (demands.empty()) return {0, 0};

        std::vector<std::pair<int, std::uint32_t>> key(demands.size());
        for (std::size_t i = 0; i < demands.size(); ++i) key[i] = {demands[i], masks[i]};
        std::sort(key.begin(), key.end());
        auto hit = cover_memo_[kind].find(key);
        if (hit != cover_memo_[kind].end()) return hit->second;

        std::uint32_t union_mask = 0;
        for (std::uint32_t m : masks) union_mask |= m;
        std::vector<int> cols;
        for (int c = 0; c < static_cast<int>(kind_caps_[kind].size()); ++c) {
            if (union_mask & (1u << c)) cols.push_back(c);
        }

        std::pair<int, std::uint32_t> result{static_cast<int>(cols.size()), union_mask};
        for (int size = 1; size <= static_cast<int>(cols.size()); ++size) {
            std::uint32_t found = subset_search(demands, allowed, cols, size, kind);
            if (found != 0) {
                result = {size, found};
                break;
            }
        }
        cover_memo_[kind][key] = result;
        return result;
    }

    std::uint32_t subset_search(const std::vector<int>& demands,
                                const std::vector<std::vector<int>>& allowed,
                                const std::vector<int>& cols, int size, int kind) const {
        const int m = static_cast<int>(cols.size());
        if (size > m) return 0;
        std::vector<int> pick(size);
        for (int i = 0; i < size; ++i) pick[i] = i;
        while (true) {
            std::uint32_t subset = 0;
            for (int i : pick) subset |= (1u << cols[i]);
            std::vector<int> caps = kind_caps_[kind];
            for (int c = 0; c < static_cast<int>(caps.size()); ++c) {
                if (!(subset & (1u << c))) caps[c] = 0;
            }
            if (detail::unit_matching_feasible(demands, caps, allowed)) return subset;

            int i = size - 1;
            while (i >= 0 && pick[i] == m - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
        return 0;
    }

    PlacementReport build_report() {
        const std::size_t n = ws_.apps.size();
        std::vector<std::optional<Allocation>> allocs(n);

        for (int k = 0; k < kKinds; ++k) {
            std::vector<int> demands;
            std::vector<std::vector<int>> allowed;
            std::vector<int> owner_pos;
            for (std::size_t i = 0; i < best_subset_.size(); ++i) {
                const AppTemplate& app = ws_.apps[order_[best_subset_[i]]];
                int need = app.demand(kAllKinds[k]);
                if (need == 0) continue;
                std::vector<int> cols;
                for (int idx : choices_[best_subset_[i]][best_picks_[i]].comps[k]) {
                    int col = col_of_.at(idx);
                    if (best_masks_[k] & (1u << col)) cols.push_back(col);
                }
                demands.push_back(need);
                allowed.push_back(std::move(cols));
                owner_pos.push_back(best_subset_[i]);
            }
            if (demands.empty()) continue;

            std::vector<int> caps = kind_caps_[k];
            for (int c = 0; c < static_cast<int>(caps.size()); ++c) {
                if (!(best_masks_[k] & (1u << c))) caps[c] = 0;
            }
            std::vector<std::vector<int>> take =
                detail::unit_matching_solve(demands, caps, allowed);
            for (std::size_t i = 0; i < take.size(); ++i) {
                int app_index = order_[owner_pos[i]];
                if (!allocs[app_index]) {
                    allocs[app_index] = Allocation{ws_.apps[app_index].name, {}};
                }
                for (int c = 0; c < static_cast<int>(take[i].size()); ++c) {
                    if (take[i][c] == 0) continue;
                    int flat = kind_cols_[k][c];
                    allocs[app_index]->assignments.push_back(
                        {view_.components()[flat].ref, kAllKinds[k], take[i][c]});
                }
            }
        }

        std::set<int> accepted_pos(best_subset_.begin(), best_subset_.end());
        PlacementReport report;
        std::vector<int> full = view_.capacities();
        for (std::size_t i = 0; i < n; ++i) {
            bool accepted = false;
            for (int pos : accepted_pos) {
                if (order_[pos] == static_cast<int>(i)) accepted = true;
            }
            if (accepted) {
                if (!allocs[i]) allocs[i] = Allocation{ws_.apps[i].name, {}};
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
        report.active_components = best_active_ < 0 ? 0 : best_active_;
        report.heuristic = false;
        return report;
    }

    const WorkloadSet& ws_;
    const DcView& view_;
    std::vector<int> order_;
    std::vector<std::vector<RawChoice>> choices_;
    std::array<std::vector<int>, kKinds> kind_cols_;
    std::array<std::vector<int>, kKinds> kind_caps_;
    std::map<int, int> col_of_;

    const std::vector<int>* subset_ = nullptr;
    std::vector<int> picks_;
    int subset_best_active_ = -1;
    std::vector<int> subset_best_picks_;
    std::array<std::uint32_t, kKinds> subset_best_masks_{};

    bool found_for_size_ = false;
    int best_active_ = 0;
    std::vector<int> best_subset_;
    std::vector<int> best_picks_;
    std::array<std::uint32_t, kKinds> best_masks_{};

    std::array<std::map<std::vector<std::pair<int, std::uint32_t>>, std::pair<int, std::uint32_t>>,
               kKinds>
        cover_memo_;
};

} // namespace

PlacementReport oracle_place(const WorkloadSet& workloads, const DataCenter& dc,
                             const DisaggregationConfig& config) {
    DcView view = DcView::build(dc, config);
    int comps = static_cast<int>(view.components().size());
    if (comps > kOracleMaxComponents ||
        static_cast<int>(workloads.apps.size()) > kOracleMaxApps) {
        throw config_error("placement oracle accepts at most " +
                           std::to_string(kOracleMaxComponents) + " components and " +
                           std::to_string(kOracleMaxApps) + " apps");
    }
    OracleSolver solver(workloads, view);
    return solver.solve();
}

} // namespace compdc
