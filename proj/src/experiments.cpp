#include "lorasic/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "lorasic/errors.hpp"

namespace lorasic {

std::optional<SweepVariable> parse_sweep_variable(std::string_view name)
{
    if (name == "d1")
        return SweepVariable::d1;
    if (name == "alpha")
        return SweepVariable::alpha;
    if (name == "gamma_db")
        return SweepVariable::gamma_db;
    if (name == "nbar")
        return SweepVariable::nbar;
    return std::nullopt;
}

std::string_view to_string(SweepVariable v)
{
    switch (v)
    {
    case SweepVariable::d1: return "d1";
    case SweepVariable::alpha: return "alpha";
    case SweepVariable::gamma_db: return "gamma_db";
    case SweepVariable::nbar: return "nbar";
    }
    return "?";
}

std::vector<double> SweepSpec::grid() const
{
    if (!(step > 0.0) || !std::isfinite(step))
        throw std::invalid_argument("sweep step must be positive");
    if (!(start <= stop) || !std::isfinite(start) || !std::isfinite(stop))
        throw std::invalid_argument("sweep range must satisfy start <= stop");
    double const span = (stop - start) / step;
    if (span > 1e6)
        throw std::invalid_argument("sweep grid exceeds 10^6 points");
    auto const n = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
    std::vector<double> xs(n);
    for (std::size_t k = 0; k < n; ++k)
        xs[k] = start + static_cast<double>(k) * step;
    return xs;
}

std::vector<SweepRow> sweep(SweepSpec const& spec, NetworkConfig const& base)
{
    auto const xs = spec.grid();

    NetworkConfig cfg = base;
    if (spec.gamma_db)
        cfg.radio.capture_threshold_db = *spec.gamma_db;
    cfg.traffic.n_bar = spec.nbar;

    if (spec.variable == SweepVariable::d1)
    {
        for (double x : xs)
            (void)ring_of(x, cfg.layout);
    }
    else
    {
        (void)ring_of(spec.d1, cfg.layout);
    }
    if (spec.variable == SweepVariable::alpha && xs.front() < 0.0)
        throw std::invalid_argument("alpha sweep must be nonnegative");
    if (spec.variable == SweepVariable::nbar && xs.front() < 0.0)
        throw std::invalid_argument("nbar sweep must be nonnegative");

    std::vector<SweepRow> rows;
    rows.reserve(xs.size());
    for (std::size_t k = 0; k < xs.size(); ++k)
    {
        double const x = xs[k];
        NetworkConfig point = cfg;
        double d1 = spec.d1;
        switch (spec.variable)
        {
        case SweepVariable::d1: d1 = x; break;
        case SweepVariable::gamma_db: point.radio.capture_threshold_db = x; break;
        case SweepVariable::nbar: point.traffic.n_bar = x; break;
        case SweepVariable::alpha: break;
        }

        double alpha = 0.0;
        if (spec.variable == SweepVariable::alpha)
            alpha = x;
        else if (spec.variable != SweepVariable::nbar && spec.alpha)
            alpha = *spec.alpha;
        else
            alpha = interferer_intensity(ring_of(d1, point.layout), point.traffic, point.layout);

        SweepRow row;
        row.x = x;
        row.analytic = coverage(d1, point, alpha);
        if (spec.mc_trials > 0)
            row.mc = estimate(d1, point, alpha, spec.mc_trials, chunk_seed(spec.seed, k), spec.workers);
        rows.push_back(row);
    }
    return rows;
}

std::vector<CapacityRow> capacity_table(std::vector<double> const& alphas, std::vector<SfParams> const& sf_table)
{
    if (sf_table.size() != static_cast<std::size_t>(kNumRings))
        throw std::invalid_argument("capacity_table: SF table must have six rows");
    auto rows_by_sf = sf_table;
    std::sort(rows_by_sf.begin(), rows_by_sf.end(), [](auto const& a, auto const& b) { return a.sf < b.sf; });

    std::vector<CapacityRow> out;
    out.reserve(alphas.size());
    for (double alpha : alphas)
    {
        if (!(alpha > 0.0))
            throw std::invalid_argument("capacity_table: alphas must be positive");
        CapacityRow row;
        row.alpha = alpha;
        for (int i = 0; i < kNumRings; ++i)
        {
            // full-precision duty cycle; the tabulated one carries only three digits
            double const p = duty_cycle_from_toa(rows_by_sf[i].toa_ms, kMessagePeriodMs);
            row.nodes[i] = nodes_from_alpha(alpha, p);
            row.total += row.nodes[i];
        }
        out.push_back(row);
    }
    return out;
}

double find_alpha_for_target(double target, double d1, NetworkConfig const& cfg, bool with_sic, double alpha_max)
{
    if (!(target > 0.0 && target < 1.0))
        throw std::invalid_argument("target must lie in (0, 1)");
    if (!(alpha_max > 0.0))
        throw std::invalid_argument("alpha_max must be positive");

    double const h1 = connection_probability(d1, cfg);
    auto objective = [&](double alpha) {
        double q = capture_probability(d1, cfg, alpha);
        if (with_sic)
            q += sic_capture_probability(d1, cfg, alpha);
        return h1 * q;
    };

    if (h1 < target)
        throw InfeasibleError("target " + std::to_string(target) + " exceeds the interference-free H1 = " +
                              std::to_string(h1));

    constexpr int kSamples = 64;
    double prev = objective(0.0);
    for (int s = 1; s <= kSamples; ++s)
    {
        double const cur = objective(alpha_max * s / kSamples);
        if (cur > prev + 1e-12)
            throw std::logic_error("objective is not monotone decreasing in alpha on the bracket");
        prev = cur;
    }
    if (prev > target)
        throw InfeasibleError("target still met at alpha_max = " + std::to_string(alpha_max));

    double lo = 0.0;
    double hi = alpha_max;
    while (hi - lo > 1e-10)
    {
        double const mid = 0.5 * (lo + hi);
        (objective(mid) >= target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<ValidationCheck> validate_against_mc(NetworkConfig const& cfg, std::vector<double> const& distances,
                                                 std::vector<double> const& alphas, std::uint64_t trials,
                                                 std::uint64_t seed, unsigned workers)
{
    std::vector<ValidationCheck> checks;
    std::uint64_t point = 0;
    for (double d1 : distances)
    {
        for (double alpha : alphas)
        {
            auto const a = coverage(d1, cfg, alpha);
            auto const mc = estimate(d1, cfg, alpha, trials, chunk_seed(seed, point++), workers);

            auto add = [&](std::string metric, double analytic, McEstimate const& e, double threshold,
                           bool one_sided) {
                ValidationCheck c;
                c.d1 = d1;
                c.alpha = alpha;
                c.metric = std::move(metric);
                c.analytic = analytic;
                c.simulated = e.mean;
                c.ci95 = e.ci95_halfwidth;
                c.deviation = e.mean - analytic;
                c.threshold = threshold;
                c.passed = one_sided ? c.deviation >= -threshold : std::abs(c.deviation) <= threshold;
                checks.push_back(std::move(c));
            };
            add("connected", a.h1, mc.connected, 4.0 * mc.connected.ci95_halfwidth, false);
            add("captured", a.q1, mc.captured, 4.0 * mc.captured.ci95_halfwidth, false);
            add("c1_sic", a.c1_sic, mc.success_c1_sic, std::max(4.0 * mc.success_c1_sic.ci95_halfwidth, 0.02),
                false);
            add("c1_lower_bound", a.c1, mc.success_c1, 4.0 * mc.success_c1.ci95_halfwidth, true);
        }
    }
    return checks;
}

} // namespace lorasic
