#include <algorithm>
#include <cmath>
#include <vector>

#include "compdc/errors.hpp"
#include "compdc/fabric.hpp"

// Brute-force targeted-throughput reference. Instead of schedules it searches
// over per-pair wavelength-use counts x[s][t]: a non-negative integer matrix
// with zero diagonal and row and column sums at most 2t is exactly the load
// of some assignment of the 2t wavelengths (pad it to a 2t-regular bipartite
// multigraph and edge-color it; each color class is one wavelength's partial
// matching). The carried load of a count matrix is sum of min(demand, rate*x).

namespace compdc {
namespace {

struct CountSearch {
    int n = 0;
    int budget = 0;  // 2t
    double rate = 0.0;
    const DemandMatrix* demand = nullptr;

    std::vector<std::pair<int, int>> pairs;  // off-diagonal, row-major
    std::vector<double> pair_cap;            // min(demand, rate * budget)
    std::vector<double> suffix_bound;
    std::vector<int> row_left;
    std::vector<int> col_left;
    std::vector<int> x;
    std::vector<int> best_x;
    double best_total = -1.0;

    void prepare() {
        for (int s = 0; s < n; ++s) {
            for (int d = 0; d < n; ++d) {
                if (s != d) pairs.push_back({s, d});
            }
        }
        for (auto [s, d] : pairs) {
            pair_cap.push_back(std::min(demand->at(s, d), rate * budget));
        }
        suffix_bound.assign(pairs.size() + 1, 0.0);
        for (int i = static_cast<int>(pairs.size()) - 1; i >= 0; --i) {
            suffix_bound[i] = suffix_bound[i + 1] + pair_cap[i];
        }
        row_left.assign(n, budget);
        col_left.assign(n, budget);
        x.assign(pairs.size(), 0);
    }

    void run(std::size_t at, double total) {
        if (at == pairs.size()) {
            if (total > best_total) {
                best_total = total;
                best_x = x;
            }
            return;
        }
        if (total + suffix_bound[at] <= best_total) return;
        auto [s, d] = pairs[at];
        double dem = demand->at(s, d);
        int useful = 0;
        if (dem >= rate * budget) useful = budget;
        else if (dem > 0.0) useful = static_cast<int>(std::ceil(dem / rate));
        int high = std::min({budget, row_left[s], col_left[d], useful});
        for (int v = high; v >= 0; --v) {
            x[at] = v;
            row_left[s] -= v;
            col_left[d] -= v;
            run(at + 1, total + std::min(dem, rate * v));
            row_left[s] += v;
            col_left[d] += v;
            x[at] = 0;
        }
    }
};

} // namespace

ThroughputReport oracle_throughput_targeted(const TargetedFabric& fabric,
                                            const DemandMatrix& demand) {
    if (demand.n() > kFabricOracleMaxNodes || fabric.t_per_interface > kFabricOracleMaxT) {
        throw config_error("throughput oracle accepts at most " +
                           std::to_string(kFabricOracleMaxNodes) + " nodes and t <= " +
                           std::to_string(kFabricOracleMaxT));
    }
    ValidationResult check = validate_plan(fabric);
    if (!check.ok()) {
        throw config_error("invalid fabric: " + check.violations.front().entity_id + ": " +
                           check.violations.front().message);
    }
    if (fabric.n_nodes != demand.n()) {
        throw config_error("demand matrix is " + std::to_string(demand.n()) +
                           " nodes wide but the fabric has " + std::to_string(fabric.n_nodes));
    }

    CountSearch search;
    search.n = demand.n();
    search.budget = 2 * fabric.t_per_interface;
    search.rate = fabric.rate_gbps;
    search.demand = &demand;
    search.prepare();
    search.run(0, 0.0);

    ThroughputReport report;
    report.optimal = true;
    report.carried.assign(demand.n(), std::vector<double>(demand.n(), 0.0));
    for (std::size_t i = 0; i < search.pairs.size(); ++i) {
        auto [s, d] = search.pairs[i];
        double carried = std::min(demand.at(s, d), search.rate * search.best_x[i]);
        report.carried[s][d] = carried;
        report.carried_total += carried;
    }
    return report;
}

} // namespace compdc
