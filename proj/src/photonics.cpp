#include "optolink/photonics.hpp"

#include <cmath>
#include <string>

namespace optolink::photonics {

void PhotonicParams::validate() const {
    auto non_negative = [](double v, const char* name) {
        if (v < 0.0 || !std::isfinite(v))
            throw InvalidParamsError(std::string(name) + " must be >= 0");
    };
    auto positive = [](double v, const char* name) {
        if (v <= 0.0 || !std::isfinite(v))
            throw InvalidParamsError(std::string(name) + " must be > 0");
    };
    non_negative(laser_source_loss_db, "laser_source_loss_db");
    non_negative(coupler_loss_db, "coupler_loss_db");
    non_negative(splitter_loss_db, "splitter_loss_db");
    non_negative(waveguide_loss_db_per_cm, "waveguide_loss_db_per_cm");
    non_negative(ring_drop_loss_db, "ring_drop_loss_db");
    non_negative(ring_through_loss_db, "ring_through_loss_db");
    non_negative(photodetector_loss_db, "photodetector_loss_db");
    non_negative(ring_heating_mw, "ring_heating_mw");
    non_negative(tx_power_mw_per_channel, "tx_power_mw_per_channel");
    non_negative(rx_power_mw_per_channel, "rx_power_mw_per_channel");
    non_negative(laser_wall_mw_per_channel, "laser_wall_mw_per_channel");
    positive(per_wavelength_gbit_per_s, "per_wavelength_gbit_per_s");
    positive(per_channel_gbyte_per_s, "per_channel_gbyte_per_s");
    if (!std::isfinite(rx_sensitivity_dbm))
        throw InvalidParamsError("rx_sensitivity_dbm must be finite");
}

double path_insertion_loss_db(const OpticalPath& path, const PhotonicParams& params) {
    params.validate();
    if (path.couplers < 0 || path.splitters < 0 || path.through_rings < 0)
        throw NegativeLengthError("path component counts must be >= 0");
    if (path.waveguide_cm < 0.0 || !std::isfinite(path.waveguide_cm))
        throw NegativeLengthError("waveguide length must be >= 0");

    double loss = params.laser_source_loss_db;
    loss += path.couplers * params.coupler_loss_db;
    loss += path.splitters * params.splitter_loss_db;
    loss += path.waveguide_cm * params.waveguide_loss_db_per_cm;
    loss += path.through_rings * params.ring_through_loss_db;
    if (path.drop_ring) loss += params.ring_drop_loss_db;
    if (path.photodetector) loss += params.photodetector_loss_db;
    return loss;
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double mw_to_dbm(double mw) { return 10.0 * std::log10(mw); }

LaserRequirement required_laser_power(const OpticalPath& path, const PhotonicParams& params) {
    const double dbm = params.rx_sensitivity_dbm + path_insertion_loss_db(path, params);
    return LaserRequirement{dbm, dbm_to_mw(dbm)};
}

ChannelPower channel_electrical_power(const PhotonicParams& params) {
    params.validate();
    ChannelPower p{};
    p.laser_mw = params.laser_wall_mw_per_channel;
    p.tx_mw = params.tx_power_mw_per_channel;
    p.rx_mw = params.rx_power_mw_per_channel;
    p.total_mw = p.laser_mw + p.tx_mw + p.rx_mw;
    return p;
}

}  // namespace optolink::photonics
