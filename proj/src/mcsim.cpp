#include "lorasic/mcsim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

namespace lorasic {

double TrialRng::exponential()
{
    // (x + 0.5) 2^-53 keeps u strictly inside (0, 1) so the power is positive
    double const u = (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
    return -std::log1p(-u);
}

int TrialRng::poisson(double mean)
{
    // Inversion loses e^-mean to underflow for large means; a Poisson(mean)
    // is a sum of Poisson(mean / m) parts, each small enough to invert.
    int const parts = mean > 10.0 ? static_cast<int>(std::ceil(mean / 10.0)) : 1;
    double const part_mean = mean / parts;
    double const p0 = std::exp(-part_mean);
    int total = 0;
    for (int part = 0; part < parts; ++part)
    {
        double const u = uniform();
        double p = p0;
        double cdf = p0;
        int k = 0;
        while (u >= cdf && k < 1000)
        {
            ++k;
            p *= part_mean / k;
            cdf += p;
        }
        total += k;
    }
    return total;
}

TrialContext TrialContext::make(double d1, NetworkConfig const& cfg, double alpha)
{
    if (!(alpha >= 0.0) || std::isinf(alpha))
        throw std::invalid_argument("alpha must be finite and nonnegative");
    TrialContext ctx;
    ctx.d1 = d1;
    ctx.alpha = alpha;
    ctx.ring = ring_of(d1, cfg.layout);
    ctx.layout = cfg.layout;
    ctx.tx_power_mw = cfg.tx_power_mw();
    ctx.gain1 = path_loss_gain(d1, cfg.radio);
    ctx.sensitivity_mw = db_to_linear(cfg.sf_params(ctx.ring).snr_threshold_db) * cfg.noise_mw();
    ctx.gamma = cfg.capture_threshold();
    ctx.path_loss_exp = cfg.radio.path_loss_exp;
    ctx.wavelength = kSpeedOfLight / cfg.radio.carrier_hz;
    return ctx;
}

TrialDraw draw_trial(TrialContext const& ctx, TrialRng& rng)
{
    TrialDraw draw;
    draw.k = rng.poisson(ctx.alpha);
    draw.interferer_distances.reserve(draw.k);
    draw.fading_powers.reserve(draw.k + 1);
    draw.gains.reserve(draw.k + 1);

    draw.fading_powers.push_back(rng.exponential());
    draw.gains.push_back(draw.fading_powers[0] * ctx.gain1 * ctx.tx_power_mw);
    for (int j = 0; j < draw.k; ++j)
    {
        double const d = sample_distance_in_ring(ctx.ring, ctx.layout, rng.uniform());
        double const fading = rng.exponential();
        // d == 0 only on an l0 = 0 ring; the infinite gain then swamps the reference
        double const g = std::pow(ctx.wavelength / (4.0 * std::numbers::pi * d), ctx.path_loss_exp);
        draw.interferer_distances.push_back(d);
        draw.fading_powers.push_back(fading);
        draw.gains.push_back(fading * g * ctx.tx_power_mw);
    }
    return draw;
}

TrialOutcome evaluate_trial(TrialDraw const& draw, TrialContext const& ctx)
{
    TrialOutcome out;
    out.interferers = draw.k;
    double const g1 = draw.gains[0];
    out.connected = g1 >= ctx.sensitivity_mw;

    double interference = 0.0;
    for (std::size_t j = 1; j < draw.gains.size(); ++j)
        interference += draw.gains[j];
    out.captured = draw.k == 0 || g1 >= ctx.gamma * interference;

    if (draw.k == 1 && !out.captured)
    {
        double const g2 = draw.gains[1];
        out.sic_decoded = g2 >= ctx.gamma * g1 && g2 >= ctx.sensitivity_mw && g1 >= ctx.sensitivity_mw;
    }

    out.success_c1 = out.connected && out.captured;
    out.success_c1_sic = out.connected && (out.captured || out.sic_decoded);
    return out;
}

TrialOutcome run_trial(double d1, NetworkConfig const& cfg, double alpha, TrialRng& rng)
{
    auto const ctx = TrialContext::make(d1, cfg, alpha);
    return evaluate_trial(draw_trial(ctx, rng), ctx);
}

McEstimate McEstimate::from_counts(std::uint64_t hits, std::uint64_t trials)
{
    McEstimate e;
    e.trials = trials;
    if (trials == 0)
        return e;
    e.mean = static_cast<double>(hits) / static_cast<double>(trials);
    e.ci95_halfwidth = 1.96 * std::sqrt(e.mean * (1.0 - e.mean) / static_cast<double>(trials));
    return e;
}

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t index)
{
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

struct Tally
{
    std::uint64_t trials = 0;
    std::uint64_t connected = 0;
    std::uint64_t captured = 0;
    std::uint64_t success_c1 = 0;
    std::uint64_t success_c1_sic = 0;
    std::uint64_t collisions = 0;
    std::uint64_t single = 0;

    void add(TrialOutcome const& o)
    {
        ++trials;
        connected += o.connected;
        captured += o.captured;
        success_c1 += o.success_c1;
        success_c1_sic += o.success_c1_sic;
        collisions += o.interferers > 0;
        single += o.interferers == 1;
    }

    void merge(Tally const& t)
    {
        trials += t.trials;
        connected += t.connected;
        captured += t.captured;
        success_c1 += t.success_c1;
        success_c1_sic += t.success_c1_sic;
        collisions += t.collisions;
        single += t.single;
    }
};

Tally run_chunk(TrialContext const& ctx, std::uint64_t seed, std::uint64_t chunk, std::uint64_t n)
{
    TrialRng rng(chunk_seed(seed, chunk));
    Tally t;
    for (std::uint64_t i = 0; i < n; ++i)
        t.add(evaluate_trial(draw_trial(ctx, rng), ctx));
    return t;
}

} // namespace

McReport estimate(double d1, NetworkConfig const& cfg, double alpha, std::uint64_t n_trials,
                  std::uint64_t seed, unsigned workers)
{
    if (n_trials == 0)
        throw std::invalid_argument("estimate: n_trials must be at least 1");
    auto const ctx = TrialContext::make(d1, cfg, alpha);

    std::uint64_t const n_chunks = (n_trials + kChunkTrials - 1) / kChunkTrials;
    std::vector<Tally> tallies(n_chunks);
    auto chunk_size = [&](std::uint64_t c) { return std::min(kChunkTrials, n_trials - c * kChunkTrials); };

    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, n_chunks));

    if (workers <= 1)
    {
        for (std::uint64_t c = 0; c < n_chunks; ++c)
            tallies[c] = run_chunk(ctx, seed, c, chunk_size(c));
    }
    else
    {
        std::atomic<std::uint64_t> next{0};
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::uint64_t c = next++; c < n_chunks; c = next++)
                    tallies[c] = run_chunk(ctx, seed, c, chunk_size(c));
            });
    }

    Tally total;
    for (auto const& t : tallies)
        total.merge(t);

    McReport r;
    r.connected = McEstimate::from_counts(total.connected, total.trials);
    r.captured = McEstimate::from_counts(total.captured, total.trials);
    r.success_c1 = McEstimate::from_counts(total.success_c1, total.trials);
    r.success_c1_sic = McEstimate::from_counts(total.success_c1_sic, total.trials);
    r.single_interferer = McEstimate::from_counts(total.single, total.collisions);
    return r;
}

} // namespace lorasic
