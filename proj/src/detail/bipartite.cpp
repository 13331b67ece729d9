#include "detail/bipartite.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace compdc::detail {
namespace {

struct FlowEdge {
    int to = 0;
    int cap = 0;
    int rev = 0;
};

class FlowGraph {
public:
    explicit FlowGraph(int n) : adj_(n) {}

    void add_edge(int from, int to, int cap) {
        adj_[from].push_back({to, cap, static_cast<int>(adj_[to].size())});
        adj_[to].push_back({from, 0, static_cast<int>(adj_[from].size()) - 1});
    }

    int max_flow(int source, int sink) {
        int total = 0;
        while (bfs(source, sink)) {
            iter_.assign(adj_.size(), 0);
            while (int pushed = dfs(source, sink, std::numeric_limits<int>::max())) {
                total += pushed;
            }
        }
        return total;
    }

private:
    bool bfs(int source, int sink) {
        level_.assign(adj_.size(), -1);
        level_[source] = 0;
        std::vector<int> queue{source};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            for (const FlowEdge& e : adj_[v]) {
                if (e.cap > 0 && level_[e.to] < 0) {
                    level_[e.to] = level_[v] + 1;
                    queue.push_back(e.to);
                }
            }
        }
        return level_[sink] >= 0;
    }

    int dfs(int v, int sink, int limit) {
        if (v == sink) return limit;
        for (int& i = iter_[v]; i < static_cast<int>(adj_[v].size()); ++i) {
            FlowEdge& e = adj_[v][i];
            if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
            int pushed = dfs(e.to, sink, std::min(limit, e.cap));
            if (pushed > 0) {
                e.cap -= pushed;
                adj_[e.to][e.rev].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<FlowEdge>> adj_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

} // namespace

bool flow_feasible(const std::vector<int>& demands,
                   const std::vector<int>& capacities,
                   const std::vector<std::vector<int>>& allowed) {
    const int n_left = static_cast<int>(demands.size());
    const int n_right = static_cast<int>(capacities.size());
    long long need = 0;
    for (int d : demands) need += d;
    if (need == 0) return true;

    // source 0, demands 1..n_left, capacities n_left+1.., sink last
    const int sink = n_left + n_right + 1;
    FlowGraph g(sink + 1);
    for (int i = 0; i < n_left; ++i) {
        if (demands[i] > 0) g.add_edge(0, 1 + i, demands[i]);
        for (int j : allowed[i]) {
            g.add_edge(1 + i, 1 + n_left + j, demands[i]);
        }
    }
    for (int j = 0; j < n_right; ++j) {
        if (capacities[j] > 0) g.add_edge(1 + n_left + j, sink, capacities[j]);
    }
    return g.max_flow(0, sink) == need;
}

namespace {

// One Kuhn augmenting pass: unit vertex u tries columns in order, recursing
// to displace earlier units when a column is full.
bool kuhn_augment(int u,
                  const std::vector<std::vector<int>>& unit_cols,
                  const std::vector<int>& capacities,
                  std::vector<std::vector<int>>& col_units,
                  std::vector<int>& unit_col,
                  std::vector<bool>& visited_col) {
    for (int c : unit_cols[u]) {
        if (visited_col[c]) continue;
        visited_col[c] = true;
        if (static_cast<int>(col_units[c].size()) < capacities[c]) {
            col_units[c].push_back(u);
            unit_col[u] = c;
            return true;
        }
        for (std::size_t k = 0; k < col_units[c].size(); ++k) {
            int other = col_units[c][k];
            if (kuhn_augment(other, unit_cols, capacities, col_units, unit_col, visited_col)) {
                col_units[c][k] = u;
                unit_col[u] = c;
                return true;
            }
        }
    }
    return false;
}

std::vector<int> run_unit_matching(const std::vector<int>& demands,
                                   const std::vector<int>& capacities,
                                   const std::vector<std::vector<int>>& allowed,
                                   std::vector<int>& unit_owner) {
    std::vector<std::vector<int>> unit_cols;
    unit_owner.clear();
    for (std::size_t i = 0; i < demands.size(); ++i) {
        for (int u = 0; u < demands[i]; ++u) {
            unit_cols.push_back(allowed[i]);
            unit_owner.push_back(static_cast<int>(i));
        }
    }
    std::vector<std::vector<int>> col_units(capacities.size());
    std::vector<int> unit_col(unit_cols.size(), -1);
    for (std::size_t u = 0; u < unit_cols.size(); ++u) {
        std::vector<bool> visited_col(capacities.size(), false);
        if (!kuhn_augment(static_cast<int>(u), unit_cols, capacities, col_units, unit_col,
                          visited_col)) {
            return {};
        }
    }
    return unit_col;
}

} // namespace

bool unit_matching_feasible(const std::vector<int>& demands,
                            const std::vector<int>& capacities,
                            const std::vector<std::vector<int>>& allowed) {
    long long need = 0;
    for (int d : demands) need += d;
    if (need == 0) return true;
    std::vector<int> unit_owner;
    return !run_unit_matching(demands, capacities, allowed, unit_owner).empty();
}

std::vector<std::vector<int>> unit_matching_solve(const std::vector<int>& demands,
                                                  const std::vector<int>& capacities,
                                                  const std::vector<std::vector<int>>& allowed) {
    std::vector<std::vector<int>> take(demands.size(),
                                       std::vector<int>(capacities.size(), 0));
    long long need = 0;
    for (int d : demands) need += d;
    if (need == 0) return take;
    std::vector<int> unit_owner;
    std::vector<int> unit_col = run_unit_matching(demands, capacities, allowed, unit_owner);
    if (unit_col.empty()) return {};
    for (std::size_t u = 0; u < unit_col.size(); ++u) {
        take[unit_owner[u]][unit_col[u]] += 1;
    }
    return take;
}

std::vector<int> max_weight_assignment(const std::vector<std::vector<double>>& weight) {
    const int n = static_cast<int>(weight.size());
    if (n == 0) return {};
    const double kInf = std::numeric_limits<double>::infinity();

    // Potential-based Hungarian algorithm on the cost matrix -weight,
    // 1-indexed internally. p[j] is the row matched to column j.
    std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
    std::vector<int> p(n + 1, 0), way(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        p[0] = i;
        int j0 = 0;
        std::vector<double> minv(n + 1, kInf);
        std::vector<bool> used(n + 1, false);
        do {
            used[j0] = true;
            int i0 = p[j0];
            int j1 = -1;
            double delta = kInf;
            for (int j = 1; j <= n; ++j) {
                if (used[j]) continue;
                double cur = -weight[i0 - 1][j - 1] - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (int j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[p[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (p[j0] != 0);
        do {
            int j1 = way[j0];
            p[j0] = p[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    std::vector<int> match(n, -1);
    for (int j = 1; j <= n; ++j) {
        if (p[j] != 0) match[p[j] - 1] = j - 1;
    }
    return match;
}

} // namespace compdc::detail
