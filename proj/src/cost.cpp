#include "compdc/cost.hpp"

#include <algorithm>

#include "compdc/errors.hpp"
#include "detail/text.hpp"

namespace compdc {
namespace {

void require_valid(const CostParams& p) {
    if (p.n_nodes < 2) throw config_error("cost model needs at least 2 nodes");
    if (!(p.generic_cap_gbps > 0.0)) throw config_error("generic link capacity must be positive");
    if (p.targeted_t < 1) throw config_error("targeted design needs at least 1 transceiver");
    if (!(p.targeted_rate_gbps > 0.0)) throw config_error("targeted rate must be positive");
    if (!(p.price_generic_per_gbps > 0.0)) throw config_error("generic price must be positive");
    if (!(p.price_targeted_per_gbps > 0.0)) throw config_error("targeted price must be positive");
}

} // namespace

double capex_generic(const CostParams& params) {
    require_valid(params);
    double links = static_cast<double>(params.n_nodes) * (params.n_nodes - 1);
    return links * params.generic_cap_gbps * params.price_generic_per_gbps;
}

double capex_targeted(const CostParams& params) {
    require_valid(params);
    double per_node = 2.0 * params.targeted_t * params.targeted_rate_gbps;
    return static_cast<double>(params.n_nodes) * per_node * params.price_targeted_per_gbps;
}

double cost_ratio(const CostParams& params) {
    CostParams unit_generic = params;
    unit_generic.price_generic_per_gbps = 1.0;
    return capex_generic(unit_generic) / capex_targeted(params);
}

std::vector<SweepRow> sweep(std::vector<int> n_values, std::vector<int> y_values,
                                 const CostParams& base) {
    std::sort(n_values.begin(), n_values.end());
    n_values.erase(std::unique(n_values.begin(), n_values.end()), n_values.end());
    std::sort(y_values.begin(), y_values.end());
    y_values.erase(std::unique(y_values.begin(), y_values.end()), y_values.end());

    std::vector<SweepRow> rows;
    for (int n : n_values) {
        for (int y : y_values) {
            CostParams p = base;
            p.n_nodes = n;
            p.price_targeted_per_gbps = static_cast<double>(y);
            SweepRow row;
            row.n = n;
            row.y = y;
            row.capex_generic = capex_generic(p);
            row.capex_targeted = capex_targeted(p);
            row.ratio = cost_ratio(p);
            rows.push_back(row);
        }
    }
    return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows) {
    std::string out = "n,y,capex_generic,capex_targeted,ratio\n";
    for (const SweepRow& r : rows) {
        out += std::to_string(r.n) + "," + std::to_string(r.y) + "," +
               detail::format_number(r.capex_generic) + "," +
               detail::format_number(r.capex_targeted) + "," + detail::format_number(r.ratio) +
               "\n";
    }
    return out;
}

} // namespace compdc
