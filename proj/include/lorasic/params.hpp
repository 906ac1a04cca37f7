#pragma once

#include <vector>

namespace lorasic {

/// One row of the LoRa uplink characteristics table (9-byte payload,
/// 125 kHz, CRC and explicit header).
struct SfParams
{
    int sf = 7;
    double toa_ms = 0.0;
    double bitrate_kbps = 0.0;
    double sensitivity_dbm = 0.0;
    double snr_threshold_db = 0.0;
    double duty_cycle = 0.0;
};

struct RadioConfig
{
    double carrier_hz = 868e6;
    double bandwidth_hz = 125e3;
    double tx_power_dbm = 14.0;
    double noise_figure_db = 6.0;
    double path_loss_exp = 2.8;
    double capture_threshold_db = 1.0;

    /// Throws std::invalid_argument naming the violated constraint.
    void validate() const;
};

inline constexpr double kSpeedOfLight = 2.998e8;
inline constexpr double kMessagePeriodMs = 15.0 * 60.0 * 1000.0;

/// SF7..SF12, duty cycles for one message every 15 minutes.
std::vector<SfParams> default_sf_table();

double duty_cycle_from_toa(double toa_ms, double period_ms);

/// Thermal noise floor -174 dBm/Hz plus noise figure over the bandwidth.
double noise_power_dbm(double noise_figure_db, double bandwidth_hz);

double db_to_linear(double db);
double linear_to_db(double ratio);

inline double dbm_to_mw(double dbm) { return db_to_linear(dbm); }

} // namespace lorasic
