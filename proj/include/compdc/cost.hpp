#pragma once

#include <string>
#include <vector>

namespace compdc {

// Interconnect pricing inputs. The generic design wires every ordered node
// pair with a fixed-capacity link; the targeted design gives each node two
// optical interfaces of t transceivers at rate_gbps each.
struct CostParams {
    int n_nodes = 2;
    double generic_cap_gbps = 800.0;
    int targeted_t = 4;
    double targeted_rate_gbps = 100.0;
    double price_generic_per_gbps = 1.0;
    double price_targeted_per_gbps = 1.0;
};

double capex_generic(const CostParams& params);
double capex_targeted(const CostParams& params);

// capex of the generic design at a unit price over capex of the targeted
// design at price_targeted_per_gbps.
double cost_ratio(const CostParams& params);

struct SweepRow {
    int n = 0;
    int y = 0;
    double capex_generic = 0.0;
    double capex_targeted = 0.0;
    double ratio = 0.0;
};

// Cartesian product of node counts and targeted price points, rows ascending
// in (n, y). Duplicates in either list collapse.
std::vector<SweepRow> sweep(std::vector<int> n_values, std::vector<int> y_values,
                                 const CostParams& base);

std::string sweep_to_csv(const std::vector<SweepRow>& rows);

} // namespace compdc
