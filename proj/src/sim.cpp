#include "optolink/sim.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "optolink/perf.hpp"

namespace optolink::sim {

namespace {

bool is_power_of_two(std::uint64_t n) { return n != 0 && (n & (n - 1)) == 0; }

struct RoleLink {
    double bandwidth_byte_per_s = 0.0;
    double propagation_s = 0.0;
};

RoleLink role_link(const topo::OptoLinkTopology& t, topo::ChannelRole role,
                   const photonics::PhotonicParams& params) {
    RoleLink link;
    double max_length_um = 0.0;
    int channels = 0;
    for (const auto& wg : t.waveguides) {
        bool carries_role = false;
        for (const auto& ch : wg.channels) {
            if (ch.role == role) {
                ++channels;
                carries_role = true;
            }
        }
        if (carries_role) max_length_um = std::max(max_length_um, wg.length_um);
    }
    link.bandwidth_byte_per_s = channels * params.per_channel_gbyte_per_s * 1e9;
    link.propagation_s = perf::propagation_latency_ps(max_length_um) * 1e-12;
    return link;
}

double phase_time(double bytes, const RoleLink& link) {
    if (bytes <= 0.0) return 0.0;
    if (link.bandwidth_byte_per_s <= 0.0)
        throw InvalidTopologyError("traffic routed over a role with no channels");
    return std::max(bytes / link.bandwidth_byte_per_s, link.propagation_s);
}

}  // namespace

void Workload::validate() const {
    if (!is_power_of_two(n)) throw InvalidWorkloadError("transform size must be a power of two");
    if (coefficient_bits < 1) throw InvalidWorkloadError("coefficient bitwidth must be >= 1");
    if (transforms < 1) throw InvalidWorkloadError("transform count must be >= 1");
    if (butterflies_per_s < 0.0) throw InvalidWorkloadError("compute rate must be >= 0");
    if (override_counts) {
        const auto& o = *override_counts;
        if (o.bytes_in < 0.0 || o.bytes_twiddle < 0.0 || o.bytes_out < 0.0)
            throw InvalidWorkloadError("override byte counts must be >= 0");
        if (o.compute_ops < 0.0) throw InvalidWorkloadError("override op count must be >= 0");
        if (o.ops_per_s <= 0.0) throw InvalidWorkloadError("override op rate must be > 0");
    }
}

const char* bottleneck_name(Bottleneck b) {
    switch (b) {
        case Bottleneck::transfer: return "transfer";
        case Bottleneck::compute: return "compute";
        case Bottleneck::balanced: return "balanced";
    }
    return "balanced";
}

std::uint64_t raw_conflict_check(const ntt::ButterflyPlan& plan, std::uint32_t buffer_depth) {
    std::uint64_t stalls = 0;
    for (std::size_t s = 0; s + 1 < plan.size(); ++s) {
        const auto& producer = plan[s];
        const auto& consumer = plan[s + 1];
        const std::uint64_t writes = 2 * producer.size();
        if (buffer_depth >= writes) continue;  // whole stage fits in the buffer
        const std::uint64_t in_flight_from = buffer_depth;  // last (writes - depth) writes

        // Write order: butterfly issue order, low index then high.
        std::unordered_map<std::uint32_t, std::uint64_t> write_slot;
        write_slot.reserve(writes);
        std::uint64_t slot = 0;
        for (const auto& [lo, hi] : producer) {
            write_slot[lo] = slot++;
            write_slot[hi] = slot++;
        }
        for (const auto& [lo, hi] : consumer) {
            for (std::uint32_t idx : {lo, hi}) {
                auto it = write_slot.find(idx);
                if (it != write_slot.end() && it->second >= in_flight_from) ++stalls;
            }
        }
    }
    return stalls;
}

SimResult simulate(const topo::OptoLinkTopology& topology, const Workload& workload,
                   const photonics::PhotonicParams& params, const SimOptions& options) {
    auto validation = topo::validate_topology(topology);
    if (!validation.ok())
        throw InvalidTopologyError("topology failed validation: " +
                                   validation.violations.front().message);
    workload.validate();
    params.validate();

    SimResult r;

    // Per-transform traffic volumes.
    if (workload.override_counts) {
        r.bytes_in = workload.override_counts->bytes_in;
        r.bytes_twiddle = workload.override_counts->bytes_twiddle;
        r.bytes_out = workload.override_counts->bytes_out;
    } else {
        const double word_bytes =
            static_cast<double>(workload.n) * workload.coefficient_bits / 8.0;
        r.bytes_in = word_bytes;
        r.bytes_out = word_bytes;
        switch (workload.twiddle_traffic) {
            case TwiddleTraffic::full_table: r.bytes_twiddle = word_bytes; break;
            case TwiddleTraffic::none: r.bytes_twiddle = 0.0; break;
            case TwiddleTraffic::per_stage:
                r.bytes_twiddle = word_bytes / 2.0 * std::log2(static_cast<double>(workload.n));
                break;
        }
    }

    const RoleLink in_link = role_link(topology, topo::ChannelRole::input_data, params);
    const RoleLink tw_link = role_link(topology, topo::ChannelRole::twiddle, params);
    const RoleLink out_link = role_link(topology, topo::ChannelRole::output, params);

    double t_in = phase_time(r.bytes_in, in_link);
    double t_tw = phase_time(r.bytes_twiddle, tw_link);
    double t_out = phase_time(r.bytes_out, out_link);

    // Memory-side ceiling: when moving all bytes through the memory
    // controller takes longer than the optical links allow, stretch the
    // transfer phases proportionally.
    if (options.memory_bandwidth_gbyte_per_s) {
        const double cap = *options.memory_bandwidth_gbyte_per_s * 1e9;
        if (cap <= 0.0) throw InvalidWorkloadError("memory bandwidth cap must be > 0");
        const double total_bytes = r.bytes_in + r.bytes_twiddle + r.bytes_out;
        const double link_transfer = std::max(t_in, t_tw) + t_out;
        const double cap_transfer = total_bytes / cap;
        if (link_transfer > 0.0 && cap_transfer > link_transfer) {
            const double scale = cap_transfer / link_transfer;
            t_in *= scale;
            t_tw *= scale;
            t_out *= scale;
        }
    }

    // Compute phase.
    double compute = 0.0;
    std::uint64_t stalls = 0;
    if (workload.override_counts) {
        compute = workload.override_counts->compute_ops / workload.override_counts->ops_per_s;
    } else {
        double rate = workload.butterflies_per_s;
        if (rate == 0.0) rate = static_cast<double>(topology.num_cores) * 300e6;
        double butterflies = static_cast<double>(ntt::butterfly_count(workload.n));
        if (options.conflict_buffer_depth) {
            stalls = raw_conflict_check(ntt::butterfly_plan(workload.n),
                                        *options.conflict_buffer_depth);
            butterflies += static_cast<double>(stalls);
        }
        compute = butterflies / rate;
    }

    const double load = std::max(t_in, t_tw);  // separate waveguides, parallel
    const double store = t_out;
    const double phase_sum = load + compute + store;
    const double phase_max = std::max({load, compute, store});
    const double k = static_cast<double>(workload.transforms);

    r.load_s = load;
    r.compute_s = compute;
    r.store_s = store;
    r.stall_count = stalls * workload.transforms;
    r.total_s = options.overlap ? (k - 1.0) * phase_max + phase_sum : k * phase_sum;
    r.transfer_s = k * (load + store);

    // Busy fraction per waveguide over the whole run.
    for (const auto& wg : topology.waveguides) {
        double busy = 0.0;
        bool in = false, tw = false, out = false;
        for (const auto& ch : wg.channels) {
            in |= ch.role == topo::ChannelRole::input_data;
            tw |= ch.role == topo::ChannelRole::twiddle;
            out |= ch.role == topo::ChannelRole::output;
        }
        if (in) busy += t_in;
        if (tw) busy += t_tw;
        if (out) busy += t_out;
        double u = r.total_s > 0.0 ? k * busy / r.total_s : 0.0;
        r.waveguide_utilization[wg.id] = std::clamp(u, 0.0, 1.0);
    }

    // Transfer vs compute, balanced when within 10 % of each other.
    const double transfer_per_transform = load + store;
    const double larger = std::max(transfer_per_transform, compute);
    if (larger <= 0.0 || std::abs(transfer_per_transform - compute) <= 0.1 * larger)
        r.bottleneck = Bottleneck::balanced;
    else
        r.bottleneck =
            transfer_per_transform > compute ? Bottleneck::transfer : Bottleneck::compute;
    return r;
}

topo::OptoLinkTopology resolve_topology(const SimConfig& config) {
    if (config.explicit_topology) return *config.explicit_topology;
    return topo::build_reference_topology(config.cores, config.bitwidth,
                                          config.waveguide_length_um);
}

SimResult run_sim_config(const SimConfig& config) {
    return simulate(resolve_topology(config), config.workload, config.photonic, config.options);
}

const char* sweep_axis_name(SweepAxis axis) {
    switch (axis) {
        case SweepAxis::cores: return "cores";
        case SweepAxis::bitwidth: return "bitwidth";
        case SweepAxis::channels: return "channels";
        case SweepAxis::n: return "n";
    }
    return "cores";
}

SweepAxis sweep_axis_from_name(const std::string& name) {
    if (name == "cores") return SweepAxis::cores;
    if (name == "bitwidth") return SweepAxis::bitwidth;
    if (name == "channels") return SweepAxis::channels;
    if (name == "n") return SweepAxis::n;
    throw InvalidWorkloadError("unknown sweep axis '" + name + "'");
}

std::vector<SweepEntry> sweep(const SimConfig& base, SweepAxis axis,
                              const std::vector<double>& values) {
    std::vector<SweepEntry> rows;
    rows.reserve(values.size());
    for (double value : values) {
        SimConfig point = base;
        long long channels_for_bandwidth = -1;
        switch (axis) {
            case SweepAxis::cores:
                point.cores = static_cast<int>(value);
                point.explicit_topology.reset();
                break;
            case SweepAxis::bitwidth:
                point.bitwidth = static_cast<int>(value);
                point.explicit_topology.reset();
                break;
            case SweepAxis::channels:
                channels_for_bandwidth = static_cast<long long>(value);
                break;
            case SweepAxis::n:
                point.workload.n = static_cast<std::uint64_t>(value);
                break;
        }

        SweepEntry row;
        row.axis_value = value;
        row.result = run_sim_config(point);
        row.cores = point.cores;
        row.bitwidth = point.bitwidth;
        row.channels_for_bandwidth =
            channels_for_bandwidth >= 0 ? channels_for_bandwidth : point.bitwidth;
        row.bandwidth_tbyte_per_s = perf::optolink_bandwidth_tbyte_per_s(
            static_cast<double>(row.channels_for_bandwidth),
            point.photonic.per_channel_gbyte_per_s);
        row.power_total_w = perf::optolink_power(point.bitwidth, point.cores,
                                                 point.photonic).total_w;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace optolink::sim
