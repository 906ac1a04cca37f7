#include "lorasic/params.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace lorasic {

void RadioConfig::validate() const
{
    if (!(carrier_hz > 0.0))
        throw std::invalid_argument("carrier_hz must be positive");
    if (!(bandwidth_hz > 0.0))
        throw std::invalid_argument("bandwidth_hz must be positive");
    if (!(path_loss_exp > 2.0))
        throw std::invalid_argument("path_loss_exp must exceed 2, got " + std::to_string(path_loss_exp));
    if (!std::isfinite(tx_power_dbm) || !std::isfinite(noise_figure_db) || !std::isfinite(capture_threshold_db))
        throw std::invalid_argument("radio levels must be finite");
}

std::vector<SfParams> default_sf_table()
{
    // sf, ToA [ms], bit rate [kbps], sensitivity [dBm], SNR threshold [dB], duty cycle
    return {
        {7, 41.22, 5.47, -123.0, -6.0, 45.8e-6},
        {8, 72.19, 3.12, -126.0, -9.0, 80.2e-6},
        {9, 144.38, 1.76, -129.0, -12.0, 160.4e-6},
        {10, 247.81, 0.98, -132.0, -15.0, 275.3e-6},
        {11, 495.62, 0.54, -134.5, -17.5, 550.7e-6},
        {12, 991.23, 0.29, -137.0, -20.0, 1101.4e-6},
    };
}

double duty_cycle_from_toa(double toa_ms, double period_ms)
{
    if (!(toa_ms > 0.0) || !(period_ms > 0.0))
        throw std::invalid_argument("duty_cycle_from_toa: ToA and period must be positive");
    if (period_ms < toa_ms)
        throw std::invalid_argument("duty_cycle_from_toa: period shorter than ToA");
    return toa_ms / period_ms;
}

double noise_power_dbm(double noise_figure_db, double bandwidth_hz)
{
    if (!(bandwidth_hz > 0.0))
        throw std::invalid_argument("noise_power_dbm: bandwidth must be positive");
    return -174.0 + noise_figure_db + 10.0 * std::log10(bandwidth_hz);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double ratio)
{
    if (!(ratio > 0.0))
        throw std::domain_error("linear_to_db: ratio must be positive");
    return 10.0 * std::log10(ratio);
}

} // namespace lorasic
