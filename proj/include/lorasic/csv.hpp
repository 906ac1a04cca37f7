#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "lorasic/experiments.hpp"

namespace lorasic {

/// 10 significant digits, '.' separator regardless of locale.
std::string format_number(double v);

/// x,h1,q1,q2,c1,c1_sic[,mc_c1,mc_c1_ci95,mc_c1_sic,mc_c1_sic_ci95] with '\n' endings.
void write_sweep_csv(std::ostream& out, std::vector<SweepRow> const& rows);

void write_capacity_csv(std::ostream& out, std::vector<CapacityRow> const& rows);

} // namespace lorasic
