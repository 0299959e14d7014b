#pragma once

#include <cstdint>
#include <stdexcept>

#include "optolink/photonics.hpp"

namespace optolink::perf {

struct NegativeLengthError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ZeroRateError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ZeroLatencyError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct UnsupportedBitwidthError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct OutOfRangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Time of flight through a waveguide. The default 10 ps/mm is the calibrated
// figure for the 1000 um reference guide.
double propagation_latency_ps(double length_um, double delay_ps_per_mm = 10.0);

// Time to clock a word of `bits` through one wavelength at `gbit_per_s`.
double serialization_latency_ns(double bits, double gbit_per_s);

// Aggregate optical bandwidth in TB/s: channels x per-channel GB/s.
double optolink_bandwidth_tbyte_per_s(double channels, double per_channel_gbyte_per_s = 12.5);

// Electrical word rate in GB/s: one `bitwidth`-bit word per latency period.
double electrical_bitrate_gbyte_per_s(double bitwidth, double latency_ns = 3.04);

/// Parallel electrical bus width needed to sustain a target optical line
/// rate: the number of bit-lanes that must fire each word period, with the
/// target expressed in Tbit/s. 1.6 -> 4864 lanes at 3.04 ns.
std::uint64_t equivalent_electrical_bitwidth(double target_tbit_per_s, double latency_ns = 3.04);

struct PowerBreakdown {
    double laser_w = 0.0;
    double tx_w = 0.0;
    double rx_w = 0.0;
    double ring_heating_w = 0.0;  // already inside tx_w; reported for visibility
    double total_w = 0.0;         // laser + tx + rx
    long long channels = 0;
};

// Whole-system optical power for a cores x bitwidth data path (one channel
// per bit per core).
PowerBreakdown optolink_power(int bitwidth, int cores,
                              const photonics::PhotonicParams& params = {});

// Electrical-baseline power lookup; exact at the synthesized configurations,
// linear in cores elsewhere. Only 32/64/128-bit tables exist.
double electrical_power_uw(int bitwidth, int cores);

struct AreaBreakdown {
    double tx_mm2 = 0.0;
    double rx_mm2 = 0.0;
    double mrr_mm2 = 0.0;
    double total_mm2 = 0.0;
    double per_channel_mm2 = 0.0;
};

struct AreaParams {
    double tx_rx_mm2_per_wavelength = 0.0096;
    double mrr_mm2 = 0.01;
    int rings_per_channel = 2;
};

AreaBreakdown optolink_area(long long channels, const AreaParams& params = {});

// Electrical-baseline area at 128-bit width. Seeded at 4/8/16 cores with
// linear interpolation between; extrapolation outside [4, 16] must be asked
// for explicitly.
double electrical_area_um2(double cores, bool allow_extrapolation = false);

/// One configuration's worth of latency/bandwidth/power/area results next to
/// the electrical baseline.
struct PerfReport {
    int bitwidth = 0;
    int cores = 0;
    long long channels = 0;

    double propagation_ps = 0.0;
    double serialization_ns = 0.0;
    double bandwidth_tbyte_per_s = 0.0;

    PowerBreakdown power;
    AreaBreakdown area;

    double electrical_latency_ns = 0.0;
    double electrical_bitrate_gbyte_per_s = 0.0;
    double electrical_power_uw = 0.0;      // < 0 when no table covers the config
    double electrical_area_um2 = 0.0;      // < 0 outside the seeded range
    std::uint64_t equivalent_bitwidth = 0; // lanes to match the optical rate
};

// channels_for_bandwidth: the channel count the bandwidth figure is quoted
// at (per-bitwidth convention: one channel per bit). Power/area always bill
// bitwidth x cores channels.
PerfReport make_perf_report(int bitwidth, int cores,
                            const photonics::PhotonicParams& params = {},
                            double waveguide_length_um = 1000.0,
                            long long channels_for_bandwidth = -1);

}  // namespace optolink::perf
