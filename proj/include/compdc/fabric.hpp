#pragma once

#include <string>
#include <vector>

#include "compdc/topology.hpp"

namespace compdc {

// The exact targeted-throughput search runs up to these sizes, the iterative
// per-wavelength heuristic beyond them. The brute-force oracle enforces its
// own tighter limits.
inline constexpr int kFabricExactMaxNodes = 5;
inline constexpr int kFabricExactMaxT = 2;
inline constexpr int kFabricOracleMaxNodes = 4;
inline constexpr int kFabricOracleMaxT = 2;

struct WavelengthPlan {
    std::vector<int> lambda_a;
    std::vector<int> lambda_b;

    // Band a carries ids 1..t, band b carries t+1..2t.
    static WavelengthPlan split_band(int t);

    std::vector<int> all_sorted() const;
};

// Full-mesh optical interconnect: every node pair is reachable, each node has
// two interfaces with t transceivers each, one wavelength per transceiver.
struct TargetedFabric {
    int n_nodes = 0;
    int t_per_interface = 4;
    double rate_gbps = 100.0;
    WavelengthPlan plan;

    static TargetedFabric with_defaults(int n_nodes, int t = 4, double rate = 100.0);

    double node_capacity_gbps() const { return 2.0 * t_per_interface * rate_gbps; }
};

// Packet-switched reference design: a dedicated link of fixed capacity per
// ordered node pair.
struct GenericFabric {
    int n_nodes = 0;
    double link_capacity_gbps = 800.0;
};

ValidationResult validate_plan(const TargetedFabric& fabric);

// Square traffic matrix in Gbps between nodes; the diagonal is zero.
class DemandMatrix {
public:
    DemandMatrix() = default;
    explicit DemandMatrix(int n);
    explicit DemandMatrix(std::vector<std::string> ids);

    int n() const { return static_cast<int>(ids_.size()); }
    const std::vector<std::string>& ids() const { return ids_; }
    double at(int src, int dst) const { return demand_[src][dst]; }
    void set(int src, int dst, double gbps);

    static DemandMatrix from_csv(const std::string& text);
    static DemandMatrix from_csv_file(const std::string& path);
    std::string to_csv() const;

private:
    std::vector<std::string> ids_;
    std::vector<std::vector<double>> demand_;
};

struct ScheduleEntry {
    int wavelength = 0;
    int source = 0;
    int dest = 0;
    double gbps = 0.0;
};

struct ThroughputReport {
    std::vector<std::vector<double>> carried;
    double carried_total = 0.0;
    std::vector<ScheduleEntry> schedule;
    bool optimal = false;
};

ThroughputReport max_throughput_targeted(const TargetedFabric& fabric, const DemandMatrix& demand);
ThroughputReport max_throughput_generic(const GenericFabric& fabric, const DemandMatrix& demand);

// Independent reference maximizer over per-pair wavelength-use counts.
// Throws config_error beyond kFabricOracleMax* sizes. Reports carried load
// only; its schedule list stays empty.
ThroughputReport oracle_throughput_targeted(const TargetedFabric& fabric,
                                            const DemandMatrix& demand);

std::string throughput_to_json(const ThroughputReport& report, const DemandMatrix& demand,
                               const std::string& design);
std::string schedule_to_csv(const ThroughputReport& report, const DemandMatrix& demand);

} // namespace compdc
