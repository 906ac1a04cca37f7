#include "lorasic/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lorasic/errors.hpp"

namespace lorasic {
namespace {

void check_ring(int ring)
{
    if (ring < 1 || ring > kNumRings)
        throw std::out_of_range("ring index " + std::to_string(ring) + " outside 1.." +
                                std::to_string(kNumRings));
}

} // namespace

RingLayout RingLayout::equal_width(double radius_m)
{
    if (!(radius_m > 0.0))
        throw std::invalid_argument("radius must be positive");
    RingLayout layout;
    for (int i = 0; i <= kNumRings; ++i)
        layout.boundaries[i] = radius_m * i / kNumRings;
    layout.boundaries.back() = radius_m;
    return layout;
}

double RingLayout::inner(int ring) const
{
    check_ring(ring);
    return boundaries[ring - 1];
}

double RingLayout::outer(int ring) const
{
    check_ring(ring);
    return boundaries[ring];
}

int RingLayout::sf_of_ring(int ring) const
{
    check_ring(ring);
    return 6 + ring;
}

void RingLayout::validate() const
{
    if (boundaries.front() < 0.0)
        throw std::invalid_argument("ring boundaries must be nonnegative");
    for (int i = 1; i <= kNumRings; ++i)
        if (!(boundaries[i] > boundaries[i - 1]))
            throw std::invalid_argument("ring boundaries must be strictly increasing");
}

double TrafficModel::density(RingLayout const& layout) const
{
    double const r = layout.radius();
    return n_bar / (std::numbers::pi * r * r);
}

void TrafficModel::validate() const
{
    if (!(n_bar >= 0.0))
        throw std::invalid_argument("nbar must be nonnegative");
    for (double p : duty_cycles)
        if (!(p >= 0.0 && p < 1.0))
            throw std::invalid_argument("duty cycles must lie in [0, 1)");
}

int ring_of(double d, RingLayout const& layout)
{
    if (!(d > 0.0) || d > layout.radius())
        throw OutOfCoverageError("distance " + std::to_string(d) + " m outside the coverage disc (0, " +
                                 std::to_string(layout.radius()) + "]");
    for (int i = 1; i <= kNumRings; ++i)
        if (d <= layout.boundaries[i])
            return i;
    return kNumRings;
}

double ring_area(int ring, RingLayout const& layout)
{
    double const lo = layout.inner(ring);
    double const hi = layout.outer(ring);
    return std::numbers::pi * (hi * hi - lo * lo);
}

double interferer_intensity(int ring, TrafficModel const& traffic, RingLayout const& layout)
{
    check_ring(ring);
    return 2.0 * traffic.duty_cycles[ring - 1] * traffic.density(layout) * ring_area(ring, layout);
}

long nodes_from_alpha(double alpha, double duty_cycle)
{
    if (!(duty_cycle > 0.0))
        throw std::invalid_argument("nodes_from_alpha: duty cycle must be positive");
    if (!(alpha >= 0.0))
        throw std::invalid_argument("nodes_from_alpha: alpha must be nonnegative");
    return std::lround(alpha / (2.0 * duty_cycle));
}

double sample_distance_in_ring(int ring, RingLayout const& layout, double u)
{
    if (!(u >= 0.0 && u <= 1.0))
        throw std::invalid_argument("sample_distance_in_ring: u outside [0, 1]");
    double const lo = layout.inner(ring);
    double const hi = layout.outer(ring);
    double const d = std::sqrt(lo * lo + u * (hi * hi - lo * lo));
    // sqrt rounding can step just outside the annulus at the endpoints
    return std::clamp(d, lo, hi);
}

} // namespace lorasic
