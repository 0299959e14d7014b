#include "optolink/perf.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "optolink/reference_data.hpp"

namespace optolink::perf {

double propagation_latency_ps(double length_um, double delay_ps_per_mm) {
    if (length_um < 0.0 || !std::isfinite(length_um))
        throw NegativeLengthError("waveguide length must be >= 0");
    if (delay_ps_per_mm < 0.0) throw NegativeLengthError("delay per mm must be >= 0");
    return length_um / 1000.0 * delay_ps_per_mm;
}

double serialization_latency_ns(double bits, double gbit_per_s) {
    if (bits < 0.0) throw NegativeLengthError("bit count must be >= 0");
    if (gbit_per_s <= 0.0 || !std::isfinite(gbit_per_s))
        throw ZeroRateError("line rate must be > 0");
    return bits / gbit_per_s;
}

double optolink_bandwidth_tbyte_per_s(double channels, double per_channel_gbyte_per_s) {
    if (channels < 0.0) throw NegativeLengthError("channel count must be >= 0");
    if (per_channel_gbyte_per_s < 0.0) throw ZeroRateError("per-channel rate must be >= 0");
    return channels * per_channel_gbyte_per_s / 1000.0;
}

double electrical_bitrate_gbyte_per_s(double bitwidth, double latency_ns) {
    if (bitwidth < 1.0) throw NegativeLengthError("bitwidth must be >= 1");
    if (latency_ns <= 0.0 || !std::isfinite(latency_ns))
        throw ZeroLatencyError("latency must be > 0");
    return bitwidth / latency_ns / 8.0;
}

std::uint64_t equivalent_electrical_bitwidth(double target_tbit_per_s, double latency_ns) {
    if (target_tbit_per_s <= 0.0) throw ZeroRateError("target rate must be > 0");
    if (latency_ns <= 0.0) throw ZeroLatencyError("latency must be > 0");
    // lanes/latency >= target in Gbit/s; snap near-integers so exact targets
    // don't pick up an extra lane from rounding noise.
    const double lanes = target_tbit_per_s * 1000.0 * latency_ns;
    return static_cast<std::uint64_t>(std::ceil(lanes - 1e-9));
}

PowerBreakdown optolink_power(int bitwidth, int cores, const photonics::PhotonicParams& params) {
    if (bitwidth < 0 || cores < 0)
        throw NegativeLengthError("bitwidth and cores must be >= 0");
    params.validate();
    PowerBreakdown p;
    p.channels = static_cast<long long>(bitwidth) * cores;
    const double ch = static_cast<double>(p.channels);
    p.laser_w = ch * params.laser_wall_mw_per_channel * 1e-3;
    p.tx_w = ch * params.tx_power_mw_per_channel * 1e-3;
    p.rx_w = ch * params.rx_power_mw_per_channel * 1e-3;
    p.ring_heating_w = ch * params.ring_heating_mw * 1e-3;
    p.total_w = p.laser_w + p.tx_w + p.rx_w;
    return p;
}

double electrical_power_uw(int bitwidth, int cores) {
    if (cores < 1) throw OutOfRangeError("cores must be >= 1");
    const auto& table = refdata::electrical_power_table();

    std::vector<std::pair<int, double>> column;
    for (const auto& e : table)
        if (e.bitwidth == bitwidth) column.emplace_back(e.cores, e.power_uw);
    if (column.empty())
        throw UnsupportedBitwidthError("no electrical power data for bitwidth " +
                                       std::to_string(bitwidth));

    for (const auto& [c, p] : column)
        if (c == cores) return p;

    // Linear in cores on the nearest seeded segment (extrapolates past the
    // ends with the end segment's slope).
    std::sort(column.begin(), column.end());
    std::size_t hi = 1;
    while (hi + 1 < column.size() && column[hi].first < cores) ++hi;
    const auto [c0, p0] = column[hi - 1];
    const auto [c1, p1] = column[hi];
    const double t = static_cast<double>(cores - c0) / static_cast<double>(c1 - c0);
    return p0 + t * (p1 - p0);
}

AreaBreakdown optolink_area(long long channels, const AreaParams& params) {
    if (channels < 0) throw NegativeLengthError("channel count must be >= 0");
    AreaBreakdown a;
    const double ch = static_cast<double>(channels);
    a.per_channel_mm2 = 2.0 * params.tx_rx_mm2_per_wavelength +
                        params.rings_per_channel * params.mrr_mm2;
    a.tx_mm2 = ch * params.tx_rx_mm2_per_wavelength;
    a.rx_mm2 = ch * params.tx_rx_mm2_per_wavelength;
    a.mrr_mm2 = ch * params.rings_per_channel * params.mrr_mm2;
    a.total_mm2 = a.tx_mm2 + a.rx_mm2 + a.mrr_mm2;
    return a;
}

double electrical_area_um2(double cores, bool allow_extrapolation) {
    const auto& table = refdata::electrical_area_table();
    const double lo = table.front().cores;
    const double hi = table.back().cores;
    if (!allow_extrapolation && (cores < lo || cores > hi))
        throw OutOfRangeError("cores " + std::to_string(cores) + " outside seeded range [" +
                              std::to_string(static_cast<int>(lo)) + ", " +
                              std::to_string(static_cast<int>(hi)) + "]");
    std::size_t seg = 1;
    while (seg + 1 < table.size() && table[seg].cores < cores) ++seg;
    const auto& a = table[seg - 1];
    const auto& b = table[seg];
    const double t = (cores - a.cores) / static_cast<double>(b.cores - a.cores);
    return a.area_um2 + t * (b.area_um2 - a.area_um2);
}

PerfReport make_perf_report(int bitwidth, int cores, const photonics::PhotonicParams& params,
                            double waveguide_length_um, long long channels_for_bandwidth) {
    PerfReport r;
    r.bitwidth = bitwidth;
    r.cores = cores;
    if (channels_for_bandwidth < 0) channels_for_bandwidth = bitwidth;

    r.propagation_ps =
        propagation_latency_ps(waveguide_length_um, refdata::kOpticalLatencyPsPerMm);
    r.serialization_ns = serialization_latency_ns(static_cast<double>(bitwidth),
                                                  params.per_wavelength_gbit_per_s);
    r.bandwidth_tbyte_per_s = optolink_bandwidth_tbyte_per_s(
        static_cast<double>(channels_for_bandwidth), params.per_channel_gbyte_per_s);

    r.power = optolink_power(bitwidth, cores, params);
    r.channels = r.power.channels;
    r.area = optolink_area(r.channels);

    r.electrical_latency_ns = refdata::kElectricalLatencyNs;
    r.electrical_bitrate_gbyte_per_s =
        electrical_bitrate_gbyte_per_s(bitwidth, refdata::kElectricalLatencyNs);
    try {
        r.electrical_power_uw = electrical_power_uw(bitwidth, cores);
    } catch (const std::invalid_argument&) {
        r.electrical_power_uw = -1.0;
    }
    try {
        r.electrical_area_um2 = electrical_area_um2(cores);
    } catch (const std::invalid_argument&) {
        r.electrical_area_um2 = -1.0;
    }
    r.equivalent_bitwidth = equivalent_electrical_bitwidth(
        std::max(r.bandwidth_tbyte_per_s, 1e-12), refdata::kElectricalLatencyNs);
    return r;
}

}  // namespace optolink::perf
