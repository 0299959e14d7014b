#pragma once

#include <stdexcept>

namespace optolink::photonics {

struct NegativeLengthError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InvalidParamsError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Loss, power, and rate constants for one optical channel generation.
///
/// Defaults are the evaluation values for the target silicon-photonics
/// process: 5 dB laser source, 1 dB coupler, 0.2 dB splitter, 1 dB/cm
/// waveguide, 0.7 dB ring drop, 0.01 dB ring through, 0.5 dB photodetector,
/// 0.32 mW ring heating, 1.22 / 0.92 mW TX / RX drive per channel.
///
/// laser_wall_mw_per_channel is a calibration constant chosen so that the
/// total-power model lands on the measured 6.59 W for a 512-channel system.
/// rx_sensitivity_dbm is an assumption (not a measured figure) and only
/// feeds the laser-budget helper.
struct PhotonicParams {
    double laser_source_loss_db = 5.0;
    double coupler_loss_db = 1.0;
    double splitter_loss_db = 0.2;
    double waveguide_loss_db_per_cm = 1.0;
    double ring_drop_loss_db = 0.7;
    double ring_through_loss_db = 0.01;
    double photodetector_loss_db = 0.5;
    double ring_heating_mw = 0.32;        // thermal tuning, per resonator
    double tx_power_mw_per_channel = 1.22; // includes ring heating
    double rx_power_mw_per_channel = 0.92;
    double per_wavelength_gbit_per_s = 10.0;  // serialization line rate
    double per_channel_gbyte_per_s = 12.5;    // bandwidth accounting rate
    double laser_wall_mw_per_channel = 10.73;
    double rx_sensitivity_dbm = -20.0;

    // Throws InvalidParamsError on negative losses/powers or non-positive rates.
    void validate() const;
};

/// Component traversal counts along one laser-to-detector path.
struct OpticalPath {
    int couplers = 0;
    int splitters = 0;
    double waveguide_cm = 0.0;
    int through_rings = 0;
    bool drop_ring = false;
    bool photodetector = false;
};

// Sum of component losses along the path in dB; the laser source term is
// charged exactly once.
double path_insertion_loss_db(const OpticalPath& path, const PhotonicParams& params);

struct LaserRequirement {
    double dbm;
    double mw;
};

// Source power needed to hit the receiver sensitivity after path losses.
LaserRequirement required_laser_power(const OpticalPath& path, const PhotonicParams& params);

struct ChannelPower {
    double laser_mw;
    double tx_mw;
    double rx_mw;
    double total_mw;  // laser + tx + rx
};

// Per-channel electrical power split; total is the per-channel share of
// P_total = P_laser + P_TX + P_RX.
ChannelPower channel_electrical_power(const PhotonicParams& params);

double dbm_to_mw(double dbm);
double mw_to_dbm(double mw);

}  // namespace optolink::photonics
