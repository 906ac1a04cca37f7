#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lorasic/analytic.hpp"

namespace lorasic {

/// Parses flat `key = value` text with `#` comments. Omitted keys keep the
/// defaults of NetworkConfig::defaults(). Throws ConfigError.
///
/// Keys: radius_m, ring_boundaries (six comma-separated outer radii),
/// carrier_hz, bandwidth_hz, tx_power_dbm, noise_figure_db, path_loss_exp,
/// gamma_db, duty_cycle (a number for every ring, or `table1`), nbar.
NetworkConfig parse_config(std::string_view text);

/// Applies one `key=value` override on top of an existing config.
void apply_override(NetworkConfig& cfg, std::string_view key, std::string_view value);

} // namespace lorasic
