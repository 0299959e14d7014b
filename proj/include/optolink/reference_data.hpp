#pragma once

#include <string>
#include <vector>

// Single home for every published calibration value the models and the
// regression checks rely on: the synthesized electrical-baseline tables,
// the measured photonic system powers, and the accelerator bandwidth survey.

namespace optolink::refdata {

// Electrical baseline word latency (32 nm synthesis result) and the optical
// waveguide figures the timing model is calibrated to.
inline constexpr double kElectricalLatencyNs = 3.04;
inline constexpr double kOpticalLatencyPsPerMm = 10.0;
inline constexpr double kReferenceWaveguideLengthUm = 1000.0;

// Footprint constants: TX or RX block per wavelength, and one 5 um-radius
// microring; each channel carries a modulator ring and a filter ring.
inline constexpr double kTxRxAreaMm2PerWavelength = 0.0096;
inline constexpr double kMrrAreaMm2 = 0.01;
inline constexpr int kRingsPerChannel = 2;

struct ElectricalPowerEntry {
    int bitwidth;
    int cores;
    double power_uw;
};

// Synthesized electrical-network power, nine supported configurations.
const std::vector<ElectricalPowerEntry>& electrical_power_table();

struct ElectricalAreaEntry {
    int cores;
    double area_um2;
};

// Electrical-network area at 128-bit width.
const std::vector<ElectricalAreaEntry>& electrical_area_table();

struct OpticalPowerExpectation {
    int bitwidth;
    int cores;
    double power_w;
};

// Published total optical system power per configuration; the per-channel
// model must land within 0.5 % of each.
const std::vector<OpticalPowerExpectation>& optical_power_expectations();

struct BitrateExpectation {
    int bitwidth;
    double electrical_gbyte_per_s;
    double optical_tbyte_per_s;
};

// Published electrical bitrates and optical bandwidths per bitwidth.
const std::vector<BitrateExpectation>& bitrate_expectations();

struct AcceleratorRequirement {
    std::string name;
    std::string hardware;
    std::string schemes;
    std::vector<double> bandwidth_gbyte_per_s;  // some designs quote two figures
};

// Memory-bandwidth requirements of published FHE accelerators.
const std::vector<AcceleratorRequirement>& accelerator_survey();

}  // namespace optolink::refdata
