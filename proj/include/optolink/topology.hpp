#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace optolink::topo {

struct InvalidCountError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct TopologyParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ChannelRole { input_data, twiddle, output };

const char* role_name(ChannelRole role);
ChannelRole role_from_name(const std::string& name);

/// Either the memory controller or one compute core.
struct Endpoint {
    int core_id = -1;  // -1 = memory controller

    static Endpoint memory_controller() { return Endpoint{-1}; }
    static Endpoint core(int id) { return Endpoint{id}; }
    bool is_memory_controller() const { return core_id < 0; }
    bool operator==(const Endpoint&) const = default;
};

/// One wavelength assignment inside a waveguide. Wavelength ids are logical
/// channel groups; the physical data path widens each group by the word
/// bitwidth.
struct OpticalChannel {
    int wavelength_id = 0;
    int waveguide_id = 0;
    ChannelRole role = ChannelRole::input_data;
    Endpoint source;
    Endpoint sink;
};

struct Waveguide {
    int id = 0;
    double length_um = 1000.0;
    std::vector<OpticalChannel> channels;
};

// Wavelengths a single waveguide can multiplex before WDM density becomes
// unrealistic for 10 Gb/s channels.
inline constexpr int kWdmWavelengthLimit = 64;

struct WavelengthDemand {
    int distinct_wavelengths = 0;
    int max_per_waveguide = 0;
    bool exceeds_wdm_limit = false;
};

struct Violation {
    std::string code;
    std::string message;
};

struct ValidationReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

/// Memory-to-cores optical network description: parallel waveguides, each
/// multiplexing role-tagged wavelength channels.
struct OptoLinkTopology {
    int num_cores = 0;
    int bitwidth = 0;
    std::vector<Waveguide> waveguides;

    // Number of channel records across all waveguides (wavelength groups).
    int channel_count() const;
    int channel_count(ChannelRole role) const;

    // Electrical data-path width: one optical channel per bit per core.
    // This is the count the power/area models bill for.
    long long data_path_channels() const {
        return static_cast<long long>(num_cores) * bitwidth;
    }

    int distinct_wavelengths() const;

    // Modulator + filter ring per channel on a waveguide.
    int rings_on_waveguide(int waveguide_id) const;

    std::string to_json_string(int indent = 2) const;
    static OptoLinkTopology from_json_string(const std::string& text);
};

/// The reference layout, generalized from the four-core network: five
/// waveguides, input data split over waveguides 1-2, twiddle factors over
/// waveguides 3-4 reusing the input wavelength ids, results on waveguide 5
/// with fresh ids. Per core: 2+2 input, 2+2 twiddle, 2 output channels.
/// Four cores therefore use wavelengths 1..16 for data/twiddle and 17..24
/// for output.
OptoLinkTopology build_reference_topology(int num_cores, int bitwidth,
                                          double waveguide_length_um = 1000.0);

/// Structural checks; violations come back as data rather than exceptions.
/// Checks: duplicate wavelength inside one waveguide, cores missing a role,
/// dangling endpoints, role/direction mismatches.
ValidationReport validate_topology(const OptoLinkTopology& t);

WavelengthDemand wavelength_demand(const OptoLinkTopology& t);

}  // namespace optolink::topo
