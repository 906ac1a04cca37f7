#include "lorasic/cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lorasic/config.hpp"
#include "lorasic/csv.hpp"
#include "lorasic/errors.hpp"
#include "lorasic/experiments.hpp"
#include "lorasic/mcsim.hpp"

namespace lorasic {
namespace {

constexpr std::uint64_t kDefaultSeed = 20200601;

struct CommonOptions
{
    std::string config_path;
    std::vector<std::string> overrides;
    std::string output_path;
};

NetworkConfig load_config(CommonOptions const& opts)
{
    std::string text;
    if (!opts.config_path.empty())
    {
        std::ifstream in(opts.config_path);
        if (!in)
            throw ConfigError("cannot read config file '" + opts.config_path + "'");
        std::ostringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    auto cfg = parse_config(text);
    for (auto const& kv : opts.overrides)
    {
        auto const eq = kv.find('=');
        if (eq == std::string::npos)
            throw ConfigError("override '" + kv + "' is not key=value");
        apply_override(cfg, std::string_view(kv).substr(0, eq), std::string_view(kv).substr(eq + 1));
    }
    return cfg;
}

// --alpha wins, then --nbar, then the config's nbar; otherwise the unit-load border scenario.
double resolve_alpha(double d1, NetworkConfig const& cfg, std::optional<double> alpha, std::optional<double> nbar)
{
    if (alpha)
        return *alpha;
    TrafficModel traffic = cfg.traffic;
    if (nbar)
        traffic.n_bar = *nbar;
    if (traffic.n_bar > 0.0)
        return interferer_intensity(ring_of(d1, cfg.layout), traffic, cfg.layout);
    return 1.0;
}

void emit(CommonOptions const& opts, std::string const& text, std::ostream& out)
{
    if (opts.output_path.empty() || opts.output_path == "-")
    {
        out << text;
        return;
    }
    std::ofstream file(opts.output_path, std::ios::binary);
    if (!file)
        throw std::runtime_error("cannot write '" + opts.output_path + "'");
    file << text;
}

std::vector<double> parse_alpha_list(std::string const& text)
{
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ','))
    {
        std::size_t used = 0;
        double v = 0.0;
        try
        {
            v = std::stod(item, &used);
        }
        catch (std::exception const&)
        {
            used = 0;
        }
        if (used == 0 || used != item.size())
            throw std::invalid_argument("--alphas: bad number '" + item + "'");
        out.push_back(v);
    }
    if (out.empty())
        throw std::invalid_argument("--alphas: empty list");
    return out;
}

} // namespace

int run_cli(std::span<char const* const> argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Coverage of LoRa uplinks with successive interference cancellation"};
    app.require_subcommand(1);

    CommonOptions common;
    app.add_option("-c,--config", common.config_path, "key = value configuration file");
    app.add_option("-s,--set", common.overrides, "override a configuration key (key=value)");
    app.add_option("-o,--output", common.output_path, "output file (default: stdout)");

    std::optional<double> alpha;
    std::optional<double> nbar;
    double d1 = 3000.0;
    std::uint64_t seed = kDefaultSeed;
    std::uint64_t trials = 100000;
    unsigned workers = 0;

    auto* table1 = app.add_subcommand("table1", "print the per-SF uplink table");

    auto* cov = app.add_subcommand("coverage", "closed-form probabilities at one distance");
    cov->add_option("--d1", d1, "reference distance [m]")->required();
    auto* cov_alpha = cov->add_option("--alpha", alpha, "interferer intensity in the reference ring");
    cov->add_option("--nbar", nbar, "mean node count in the disc")->excludes(cov_alpha);

    std::string var_name;
    SweepSpec spec;
    auto* sw = app.add_subcommand("sweep", "tabulate probabilities over a grid");
    sw->add_option("--var", var_name, "swept variable")->required()->check(
        CLI::IsMember({"d1", "alpha", "gamma_db", "nbar"}));
    sw->add_option("--start", spec.start)->required();
    sw->add_option("--stop", spec.stop)->required();
    sw->add_option("--step", spec.step)->required();
    sw->add_option("--d1", d1, "reference distance when not swept [m]");
    auto* sw_alpha = sw->add_option("--alpha", alpha);
    sw->add_option("--nbar", nbar)->excludes(sw_alpha);
    std::optional<double> gamma_db;
    sw->add_option("--gamma-db", gamma_db, "capture threshold when not swept [dB]");
    sw->add_option("--mc-trials", spec.mc_trials, "Monte Carlo trials per point (0 = analytic only)");
    sw->add_option("--seed", seed);
    sw->add_option("--workers", workers, "threads (0 = all cores)");

    auto* mc = app.add_subcommand("mc", "Monte Carlo estimate at one distance");
    mc->add_option("--d1", d1)->required();
    mc->add_option("--trials", trials)->required()->check(CLI::PositiveNumber);
    mc->add_option("--seed", seed);
    auto* mc_alpha = mc->add_option("--alpha", alpha);
    mc->add_option("--nbar", nbar)->excludes(mc_alpha);
    mc->add_option("--workers", workers);

    auto* val = app.add_subcommand("validate", "compare closed forms with simulation on a 3x3 grid");
    val->add_option("--trials", trials)->check(CLI::PositiveNumber);
    val->add_option("--seed", seed);
    val->add_option("--workers", workers);

    std::string alphas_text;
    auto* cap = app.add_subcommand("capacity", "node counts supported at given intensities");
    cap->add_option("--alphas", alphas_text, "comma-separated intensities")->required();

    double target = 0.8;
    bool with_sic = false;
    auto* plan = app.add_subcommand("plan", "largest intensity meeting a success target");
    plan->add_option("--target", target)->required();
    plan->add_flag("--sic", with_sic, "count SIC recoveries");
    plan->add_option("--d1", d1);

    try
    {
        app.parse(static_cast<int>(argv.size()), argv.data());
    }
    catch (CLI::ParseError const& e)
    {
        return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
    }

    NetworkConfig cfg;
    try
    {
        cfg = load_config(common);
    }
    catch (std::exception const& e)
    {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try
    {
        std::ostringstream text;
        if (*table1)
        {
            text << "sf,toa_ms,bitrate_kbps,sensitivity_dbm,snr_threshold_db,duty_cycle\n";
            for (auto const& r : cfg.sf_table)
                text << r.sf << ',' << format_number(r.toa_ms) << ',' << format_number(r.bitrate_kbps) << ','
                     << format_number(r.sensitivity_dbm) << ',' << format_number(r.snr_threshold_db) << ','
                     << format_number(r.duty_cycle) << '\n';
        }
        else if (*cov)
        {
            SweepSpec one;
            one.variable = SweepVariable::d1;
            one.start = one.stop = d1;
            one.alpha = resolve_alpha(d1, cfg, alpha, nbar);
            write_sweep_csv(text, sweep(one, cfg));
        }
        else if (*sw)
        {
            spec.variable = *parse_sweep_variable(var_name);
            spec.d1 = d1;
            spec.seed = seed;
            spec.workers = workers;
            spec.gamma_db = gamma_db;
            spec.nbar = nbar.value_or(cfg.traffic.n_bar);
            if (spec.variable == SweepVariable::alpha)
                spec.alpha.reset();
            else if (alpha)
                spec.alpha = alpha;
            else if (nbar || cfg.traffic.n_bar > 0.0)
                spec.alpha.reset();
            else
                spec.alpha = 1.0;
            write_sweep_csv(text, sweep(spec, cfg));
        }
        else if (*mc)
        {
            double const a = resolve_alpha(d1, cfg, alpha, nbar);
            auto const r = estimate(d1, cfg, a, trials, seed, workers);
            text << "metric,mean,ci95,trials\n";
            auto row = [&](char const* name, McEstimate const& e) {
                text << name << ',' << format_number(e.mean) << ',' << format_number(e.ci95_halfwidth) << ','
                     << e.trials << '\n';
            };
            row("connected", r.connected);
            row("captured", r.captured);
            row("success_c1", r.success_c1);
            row("success_c1_sic", r.success_c1_sic);
            row("single_interferer", r.single_interferer);
        }
        else if (*val)
        {
            auto const checks =
                validate_against_mc(cfg, {kValidationDistances.begin(), kValidationDistances.end()},
                                    {kValidationAlphas.begin(), kValidationAlphas.end()}, trials, seed, workers);
            text << "d1,alpha,metric,analytic,simulated,ci95,deviation,threshold,pass\n";
            double max_dev = 0.0;
            bool ok = true;
            for (auto const& c : checks)
            {
                text << format_number(c.d1) << ',' << format_number(c.alpha) << ',' << c.metric << ','
                     << format_number(c.analytic) << ',' << format_number(c.simulated) << ','
                     << format_number(c.ci95) << ',' << format_number(c.deviation) << ','
                     << format_number(c.threshold) << ',' << (c.passed ? "yes" : "no") << '\n';
                max_dev = std::max(max_dev, std::abs(c.deviation));
                ok = ok && c.passed;
            }
            emit(common, text.str(), out);
            err << "max absolute deviation " << format_number(max_dev) << "; "
                << (ok ? "all checks passed" : "some checks FAILED") << '\n';
            return ok ? kExitOk : kExitCompute;
        }
        else if (*cap)
        {
            write_capacity_csv(text, capacity_table(parse_alpha_list(alphas_text), cfg.sf_table));
        }
        else if (*plan)
        {
            double const a = find_alpha_for_target(target, d1, cfg, with_sic);
            auto const cb = coverage(d1, cfg, a);
            text << "target,sic,alpha,objective\n"
                 << format_number(target) << ',' << (with_sic ? 1 : 0) << ',' << format_number(a) << ','
                 << format_number(with_sic ? cb.c1_sic : cb.c1) << '\n';
        }
        emit(common, text.str(), out);
        return kExitOk;
    }
    catch (std::invalid_argument const& e)
    {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    catch (std::exception const& e)
    {
        err << "error: " << e.what() << '\n';
        return kExitCompute;
    }
}

} // namespace lorasic
