#include "lorasic/analytic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "lorasic/errors.hpp"
#include "lorasic/specfun.hpp"

namespace lorasic {

NetworkConfig NetworkConfig::defaults()
{
    NetworkConfig cfg;
    cfg.traffic.duty_cycles.fill(0.01);
    return cfg;
}

SfParams const& NetworkConfig::sf_params(int ring) const
{
    int const sf = layout.sf_of_ring(ring);
    for (auto const& row : sf_table)
        if (row.sf == sf)
            return row;
    throw std::invalid_argument("no SF table row for SF" + std::to_string(sf));
}

double NetworkConfig::noise_mw() const
{
    return dbm_to_mw(noise_power_dbm(radio.noise_figure_db, radio.bandwidth_hz));
}

double NetworkConfig::tx_power_mw() const { return dbm_to_mw(radio.tx_power_dbm); }

double NetworkConfig::capture_threshold() const { return db_to_linear(radio.capture_threshold_db); }

void NetworkConfig::validate() const
{
    radio.validate();
    layout.validate();
    traffic.validate();
    if (sf_table.size() != static_cast<std::size_t>(kNumRings))
        throw std::invalid_argument("SF table must have one row per ring");
    for (int ring = 1; ring <= kNumRings; ++ring)
        (void)sf_params(ring);
}

double path_loss_gain(double d, RadioConfig const& radio)
{
    if (!(d > 0.0))
        throw std::domain_error("path_loss_gain: distance must be positive");
    double const wavelength = kSpeedOfLight / radio.carrier_hz;
    return std::pow(wavelength / (4.0 * std::numbers::pi * d), radio.path_loss_exp);
}

double connection_probability(double d1, NetworkConfig const& cfg)
{
    int const ring = ring_of(d1, cfg.layout);
    double const q = db_to_linear(cfg.sf_params(ring).snr_threshold_db);
    double const gain = path_loss_gain(d1, cfg.radio);
    return std::exp(-cfg.noise_mw() * q / (cfg.tx_power_mw() * gain));
}

namespace {

void check_alpha(double alpha)
{
    if (!(alpha >= 0.0) || std::isinf(alpha))
        throw std::invalid_argument("alpha must be finite and nonnegative");
}

// l^2 2F1(1, 2/eta; 1 + 2/eta; -scale (l/d1)^eta), zero at l = 0
double boundary_term(double l, double d1, double eta, double scale)
{
    if (l == 0.0)
        return 0.0;
    return l * l * hyp2f1_1b(2.0 / eta, -scale * std::pow(l / d1, eta));
}

} // namespace

double capture_probability(double d1, NetworkConfig const& cfg, double alpha)
{
    check_alpha(alpha);
    int const ring = ring_of(d1, cfg.layout);
    if (alpha == 0.0)
        return 1.0;
    double const lo = cfg.layout.inner(ring);
    double const hi = cfg.layout.outer(ring);
    double const eta = cfg.radio.path_loss_exp;
    double const inv_gamma = 1.0 / cfg.capture_threshold();
    // pi alpha / V_i == alpha / (hi^2 - lo^2)
    double const bracket = boundary_term(hi, d1, eta, inv_gamma) - boundary_term(lo, d1, eta, inv_gamma);
    return std::exp(-alpha * bracket / (hi * hi - lo * lo));
}

double sic_capture_probability(double d1, NetworkConfig const& cfg, double alpha)
{
    check_alpha(alpha);
    int const ring = ring_of(d1, cfg.layout);
    if (alpha == 0.0)
        return 0.0;
    double const lo = cfg.layout.inner(ring);
    double const hi = cfg.layout.outer(ring);
    double const eta = cfg.radio.path_loss_exp;
    double const gamma = cfg.capture_threshold();
    double const bracket = boundary_term(hi, d1, eta, gamma) - boundary_term(lo, d1, eta, gamma);
    return alpha * std::exp(-alpha) * bracket / (hi * hi - lo * lo);
}

CoverageBreakdown coverage(double d1, NetworkConfig const& cfg, double alpha)
{
    CoverageBreakdown out;
    out.d1 = d1;
    out.alpha = alpha;
    out.ring = ring_of(d1, cfg.layout);
    out.h1 = connection_probability(d1, cfg);
    out.q1 = capture_probability(d1, cfg, alpha);
    out.q2 = sic_capture_probability(d1, cfg, alpha);
    out.c1 = out.h1 * out.q1;
    out.c1_sic = out.h1 * out.q1 + out.h1 * out.q2;
    return out;
}

double single_interferer_given_collision(double alpha)
{
    if (!(alpha > 0.0))
        throw std::domain_error("single_interferer_given_collision: alpha must be positive");
    // alpha e^-alpha / (1 - e^-alpha) == alpha / expm1(alpha)
    return alpha / std::expm1(alpha);
}

} // namespace lorasic
