#pragma once

#include <vector>

#include "lorasic/geometry.hpp"
#include "lorasic/params.hpp"

namespace lorasic {

struct NetworkConfig
{
    RadioConfig radio;
    RingLayout layout = RingLayout::equal_width(3000.0);
    std::vector<SfParams> sf_table = default_sf_table();
    TrafficModel traffic;

    /// Scenario used throughout the numeric results: R = 3000 m, six 500 m
    /// rings, p_i = 1 %, gamma = 1 dB, eta = 2.8, 868 MHz, 14 dBm, F = 6 dB.
    static NetworkConfig defaults();

    SfParams const& sf_params(int ring) const;
    double noise_mw() const;
    double tx_power_mw() const;
    double capture_threshold() const;

    void validate() const;
};

struct CoverageBreakdown
{
    double h1 = 0.0;
    double q1 = 0.0;
    double q2 = 0.0;
    double c1 = 0.0;
    double c1_sic = 0.0;
    double alpha = 0.0;
    int ring = 0;
    double d1 = 0.0;
};

/// Free-space-style power-law gain (lambda / (4 pi d))^eta.
double path_loss_gain(double d, RadioConfig const& radio);

/// H1: probability that the Rayleigh-faded SNR clears the ring's threshold.
double connection_probability(double d1, NetworkConfig const& cfg);

/// Q1: probability of surviving same-ring PPP interference by capture.
double capture_probability(double d1, NetworkConfig const& cfg, double alpha);

/// Q2: probability that exactly one interferer is present and strong
/// enough to be decoded (and cancelled) first.
double sic_capture_probability(double d1, NetworkConfig const& cfg, double alpha);

CoverageBreakdown coverage(double d1, NetworkConfig const& cfg, double alpha);

/// P[|Phi| = 1 | |Phi| > 0] for a Poisson count with mean alpha.
double single_interferer_given_collision(double alpha);

} // namespace lorasic
