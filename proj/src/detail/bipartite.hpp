#pragma once

#include <vector>

namespace compdc::detail {

// Integral feasibility of a bipartite demand/capacity system: demands[i]
// units on the left must be routed into capacities[j] on the right, where
// demand i may only use the columns listed in allowed[i]. Augmenting-path
// max-flow on the small layered graph.
bool flow_feasible(const std::vector<int>& demands,
                   const std::vector<int>& capacities,
                   const std::vector<std::vector<int>>& allowed);

// Same question answered by expanding every unit into its own vertex and
// running Kuhn's augmenting-path matching. Deliberately a separate code path
// from flow_feasible; the exhaustive oracles use this one.
bool unit_matching_feasible(const std::vector<int>& demands,
                            const std::vector<int>& capacities,
                            const std::vector<std::vector<int>>& allowed);

// As unit_matching_feasible, but also returns how many units each demand
// takes from each column: take[i][j]. Empty result means infeasible.
std::vector<std::vector<int>> unit_matching_solve(const std::vector<int>& demands,
                                                  const std::vector<int>& capacities,
                                                  const std::vector<std::vector<int>>& allowed);

// Maximum-weight perfect assignment on a square weight matrix (weights must
// be finite; zero cells act as skips). Returns the matched column per row.
// Hungarian algorithm with potentials, deterministic scan order.
std::vector<int> max_weight_assignment(const std::vector<std::vector<double>>& weight);

} // namespace compdc::detail
