#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lorasic/analytic.hpp"
#include "lorasic/mcsim.hpp"

namespace lorasic {

enum class SweepVariable { d1, alpha, gamma_db, nbar };

std::optional<SweepVariable> parse_sweep_variable(std::string_view name);
std::string_view to_string(SweepVariable v);

struct SweepSpec
{
    SweepVariable variable = SweepVariable::d1;
    double start = 0.0;
    double stop = 0.0;
    double step = 1.0;

    // Fixed point for the parameters that are not swept. When `alpha` is
    // empty the intensity comes from `nbar` and the config's duty cycles.
    double d1 = 3000.0;
    std::optional<double> alpha = 1.0;
    double nbar = 0.0;
    std::optional<double> gamma_db;

    std::uint64_t mc_trials = 0;
    std::uint64_t seed = 0;
    unsigned workers = 0;

    std::vector<double> grid() const;
};

struct SweepRow
{
    double x = 0.0;
    CoverageBreakdown analytic;
    std::optional<McReport> mc;
};

std::vector<SweepRow> sweep(SweepSpec const& spec, NetworkConfig const& cfg);

struct CapacityRow
{
    double alpha = 0.0;
    std::array<long, kNumRings> nodes{};
    long total = 0;
};

/// N_i = round(alpha / (2 p_i)) per SF, with p_i = ToA_i / 15 min.
std::vector<CapacityRow> capacity_table(std::vector<double> const& alphas,
                                        std::vector<SfParams> const& sf_table);

inline constexpr double kDefaultAlphaMax = 10.0;

/// Largest alpha keeping H1 Q1 (or H1 (Q1 + Q2) with SIC) at `target`.
/// Bisection to 1e-4 absolute on (0, alpha_max]. Throws InfeasibleError if
/// the target exceeds H1 or is still met at alpha_max, and
/// std::logic_error if the objective is not monotone on the bracket.
double find_alpha_for_target(double target, double d1, NetworkConfig const& cfg, bool with_sic,
                             double alpha_max = kDefaultAlphaMax);

/// One analytic-vs-simulation comparison at a grid point.
struct ValidationCheck
{
    double d1 = 0.0;
    double alpha = 0.0;
    std::string metric;
    double analytic = 0.0;
    double simulated = 0.0;
    double ci95 = 0.0;
    /// Signed deviation simulated - analytic.
    double deviation = 0.0;
    double threshold = 0.0;
    bool passed = false;
};

inline constexpr std::array<double, 3> kValidationDistances{750.0, 1800.0, 3000.0};
inline constexpr std::array<double, 3> kValidationAlphas{0.25, 0.5, 1.0};

/// Compares the closed forms with the simulator on a (d1, alpha) grid:
///  - connected vs H1 and captured vs Q1 within 4 CI (exact marginals),
///  - joint SIC success vs H1 (Q1 + Q2) within max(4 CI, 0.02),
///  - joint C1 no lower than H1 Q1 by more than 4 CI.
std::vector<ValidationCheck> validate_against_mc(NetworkConfig const& cfg, std::vector<double> const& distances,
                                                 std::vector<double> const& alphas, std::uint64_t trials,
                                                 std::uint64_t seed, unsigned workers = 0);

} // namespace lorasic
