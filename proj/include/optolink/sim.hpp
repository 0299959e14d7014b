#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "optolink/ntt.hpp"
#include "optolink/photonics.hpp"
#include "optolink/topology.hpp"

namespace optolink::sim {

struct InvalidTopologyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidWorkloadError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// How much twiddle traffic each transform pulls from memory: a full n-word
// table (default), nothing (all twiddles resident on-core), or one table per
// butterfly stage.
enum class TwiddleTraffic { full_table, none, per_stage };

// Byte/op counts for scenarios that are not plain NTT runs; when present
// these replace the n/bitwidth-derived volumes and the butterfly-rate
// compute model.
struct WorkloadOverride {
    double bytes_in = 0.0;
    double bytes_twiddle = 0.0;
    double bytes_out = 0.0;
    double compute_ops = 0.0;
    double ops_per_s = 1.0;
};

struct Workload {
    std::uint64_t n = 4096;        // transform size, power of two
    int coefficient_bits = 64;     // memory word per coefficient
    std::uint64_t transforms = 1;  // back-to-back transforms
    // Aggregate butterfly throughput (cores x butterflies/cycle x clock).
    // 0 means "derive from the topology": one butterfly per cycle per core
    // at 300 MHz.
    double butterflies_per_s = 0.0;
    TwiddleTraffic twiddle_traffic = TwiddleTraffic::full_table;
    std::optional<WorkloadOverride> override_counts;

    void validate() const;  // throws InvalidWorkloadError
};

struct SimOptions {
    bool overlap = true;
    // Memory-side aggregate bandwidth ceiling, GB/s. Raises transfer time to
    // total_bytes/cap when that exceeds what the optical links alone give.
    std::optional<double> memory_bandwidth_gbyte_per_s;
    // When set, read-after-write analysis of the butterfly schedule runs at
    // this staging-buffer depth and stalls stretch the compute phase.
    std::optional<std::uint32_t> conflict_buffer_depth;
};

enum class Bottleneck { transfer, compute, balanced };

const char* bottleneck_name(Bottleneck b);

struct SimResult {
    double load_s = 0.0;     // input + twiddle phase (parallel waveguides)
    double compute_s = 0.0;
    double store_s = 0.0;
    double total_s = 0.0;
    std::map<int, double> waveguide_utilization;  // id -> [0, 1]
    Bottleneck bottleneck = Bottleneck::balanced;
    std::uint64_t stall_count = 0;

    // Echo of the per-transform byte/phase accounting for reporting.
    double bytes_in = 0.0;
    double bytes_twiddle = 0.0;
    double bytes_out = 0.0;
    double transfer_s = 0.0;  // load + store across all transforms
};

/// Phase-level traffic model. Per transform the input, twiddle, and result
/// volumes move over their role's waveguides at channel-count x per-channel
/// rate (input and twiddle guides run in parallel), each phase floored by
/// the propagation delay; compute advances at the butterfly rate. With
/// overlap the transforms pipeline: total = (k-1) * max(phase) + sum(phases).
SimResult simulate(const topo::OptoLinkTopology& topology, const Workload& workload,
                   const photonics::PhotonicParams& params = {},
                   const SimOptions& options = {});

/// Read-after-write stall count for a butterfly schedule drained through a
/// write-behind buffer of `buffer_depth` coefficients. When a stage pipelines
/// in behind its predecessor, the predecessor's last (n - depth) coefficient
/// writes are still in flight; each read that lands on one costs a one-cycle
/// forwarding stall. Depth >= n therefore never stalls.
std::uint64_t raw_conflict_check(const ntt::ButterflyPlan& plan, std::uint32_t buffer_depth);

// A sweepable scenario: reference-topology arguments plus workload and
// options. explicit_topology, when set, wins over cores/bitwidth.
struct SimConfig {
    int cores = 4;
    int bitwidth = 128;
    double waveguide_length_um = 1000.0;
    std::optional<topo::OptoLinkTopology> explicit_topology;
    Workload workload;
    photonics::PhotonicParams photonic;
    SimOptions options;
};

topo::OptoLinkTopology resolve_topology(const SimConfig& config);
SimResult run_sim_config(const SimConfig& config);

enum class SweepAxis { cores, bitwidth, channels, n };

const char* sweep_axis_name(SweepAxis axis);
SweepAxis sweep_axis_from_name(const std::string& name);

struct SweepEntry {
    double axis_value = 0.0;
    SimResult result;
    // Configuration summary at this point.
    int cores = 0;
    int bitwidth = 0;
    long long channels_for_bandwidth = 0;  // per-bitwidth quoting convention
    double bandwidth_tbyte_per_s = 0.0;
    double power_total_w = 0.0;  // billed at bitwidth x cores channels
};

/// One independent simulation per value, results in input order.
std::vector<SweepEntry> sweep(const SimConfig& base, SweepAxis axis,
                              const std::vector<double>& values);

}  // namespace optolink::sim
