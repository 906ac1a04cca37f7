#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lorasic/analytic.hpp"

namespace lorasic {

/// Per-trial random state. 64-bit Mersenne twister with a hand-rolled
/// 53-bit uniform so streams are identical across standard libraries.
class TrialRng
{
  public:
    explicit TrialRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1).
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double exponential();
    int poisson(double mean);

  private:
    std::mt19937_64 engine_;
};

/// Everything drawn for one reception attempt. Index 0 is the reference.
struct TrialDraw
{
    int k = 0;
    std::vector<double> interferer_distances;
    std::vector<double> fading_powers;
    std::vector<double> gains;
};

struct TrialOutcome
{
    bool connected = false;
    bool captured = false;
    bool sic_decoded = false;
    bool success_c1 = false;
    bool success_c1_sic = false;
    int interferers = 0;
};

/// Reception context hoisted out of the trial loop.
struct TrialContext
{
    double d1 = 0.0;
    double alpha = 0.0;
    int ring = 0;
    RingLayout layout;
    double tx_power_mw = 0.0;
    double gain1 = 0.0;
    double sensitivity_mw = 0.0; // q_i * sigma_w^2
    double gamma = 0.0;
    double path_loss_exp = 0.0;
    double wavelength = 0.0;

    static TrialContext make(double d1, NetworkConfig const& cfg, double alpha);
};

TrialDraw draw_trial(TrialContext const& ctx, TrialRng& rng);

/// Decode logic for an already drawn trial (capture, then single-step SIC).
TrialOutcome evaluate_trial(TrialDraw const& draw, TrialContext const& ctx);

TrialOutcome run_trial(double d1, NetworkConfig const& cfg, double alpha, TrialRng& rng);

struct McEstimate
{
    double mean = 0.0;
    std::uint64_t trials = 0;
    double ci95_halfwidth = 0.0;

    static McEstimate from_counts(std::uint64_t hits, std::uint64_t trials);
};

struct McReport
{
    McEstimate connected;
    McEstimate captured;
    McEstimate success_c1;
    McEstimate success_c1_sic;
    /// Among trials with at least one interferer, the share with exactly one.
    McEstimate single_interferer;
};

inline constexpr std::uint64_t kChunkTrials = std::uint64_t{1} << 14;

/// Seed of chunk `index` under master seed `seed` (splitmix64 mixing).
std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t index);

/// Runs n_trials independent trials split into fixed chunks of 2^14; the
/// result depends only on (inputs, seed), never on `workers`.
/// workers == 0 picks std::thread::hardware_concurrency().
McReport estimate(double d1, NetworkConfig const& cfg, double alpha, std::uint64_t n_trials,
                  std::uint64_t seed, unsigned workers = 0);

} // namespace lorasic
