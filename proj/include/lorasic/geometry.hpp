#pragma once

#include <array>
#include <vector>

namespace lorasic {

inline constexpr int kNumRings = 6;

/// Concentric annuli around the gateway. Ring i (1-based) spans
/// (boundaries[i-1], boundaries[i]] and uses SF 6+i.
struct RingLayout
{
    std::array<double, kNumRings + 1> boundaries{};

    static RingLayout equal_width(double radius_m);

    double radius() const { return boundaries.back(); }
    double inner(int ring) const;
    double outer(int ring) const;
    int sf_of_ring(int ring) const;

    void validate() const;
};

struct TrafficModel
{
    double n_bar = 0.0;
    std::array<double, kNumRings> duty_cycles{};

    double density(RingLayout const& layout) const;
    void validate() const;
};

/// Ring containing distance d; a radius exactly on a boundary belongs to
/// the inner ring. Throws OutOfCoverageError for d <= 0 or d > R.
int ring_of(double d, RingLayout const& layout);

double ring_area(int ring, RingLayout const& layout);

/// Mean number of active same-ring interferers, 2 p_i rho V_i.
double interferer_intensity(int ring, TrafficModel const& traffic, RingLayout const& layout);

/// Node count supporting intensity alpha at duty cycle p, rounded to nearest.
long nodes_from_alpha(double alpha, double duty_cycle);

/// Inverse-CDF draw from the area-uniform radial density 2d/(l_hi^2 - l_lo^2).
double sample_distance_in_ring(int ring, RingLayout const& layout, double u);

} // namespace lorasic
