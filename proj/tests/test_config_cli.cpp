#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "lorasic/cli.hpp"
#include "lorasic/config.hpp"
#include "lorasic/errors.hpp"

using namespace lorasic;

namespace {

struct CliResult
{
    int status;
    std::string out;
    std::string err;
};

CliResult run(std::vector<char const*> args)
{
    args.insert(args.begin(), "lorasic");
    std::ostringstream out;
    std::ostringstream err;
    int const status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

} // namespace

TEST_CASE("empty config is the default scenario")
{
    auto const cfg = parse_config("");
    CHECK(cfg.layout.radius() == 3000.0);
    CHECK(cfg.layout.boundaries[1] == 500.0);
    CHECK(cfg.radio.capture_threshold_db == 1.0);
    CHECK(cfg.radio.path_loss_exp == 2.8);
    CHECK(cfg.radio.carrier_hz == 868e6);
    CHECK(cfg.radio.tx_power_dbm == 14.0);
    CHECK(cfg.radio.bandwidth_hz == 125e3);
    CHECK(cfg.radio.noise_figure_db == 6.0);
    for (double p : cfg.traffic.duty_cycles)
        CHECK(p == 0.01);
}

TEST_CASE("config keys and comments")
{
    auto const cfg = parse_config("# border scenario\n"
                                  "gamma_db = 6   # datasheet value\n"
                                  "\n"
                                  "nbar=2500\r\n"
                                  "duty_cycle = table1\n"
                                  "ring_boundaries = 400, 900, 1500, 2100, 2700, 3200\n");
    CHECK(cfg.radio.capture_threshold_db == 6.0);
    CHECK(cfg.traffic.n_bar == 2500.0);
    CHECK(cfg.traffic.duty_cycles[0] == doctest::Approx(45.8e-6));
    CHECK(cfg.traffic.duty_cycles[5] == doctest::Approx(1101.4e-6));
    CHECK(cfg.layout.boundaries[1] == 400.0);
    CHECK(cfg.layout.radius() == 3200.0);
}

TEST_CASE("config errors name the key")
{
    auto message = [](std::string const& text) {
        try
        {
            parse_config(text);
        }
        catch (ConfigError const& e)
        {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    CHECK(message("path_loss_exp = 1.5").find("path_loss_exp") != std::string::npos);
    CHECK(message("path_loss_exp = 1.5").find("exceed 2") != std::string::npos);
    CHECK(message("colour = blue").find("colour") != std::string::npos);
    CHECK(message("gamma_db = loud").find("gamma_db") != std::string::npos);
    CHECK(message("nbar = -3").find("nbar") != std::string::npos);
    CHECK(message("ring_boundaries = 1,2,3").find("ring_boundaries") != std::string::npos);
    CHECK(message("radius_m").find("line 1") != std::string::npos);
}

TEST_CASE("cli capacity")
{
    auto const r = run({"capacity", "--alphas", "0.20,0.52,1"});
    CHECK(r.status == kExitOk);
    CHECK(r.out == "alpha,sf7,sf8,sf9,sf10,sf11,sf12,total\n"
                   "0.2,2183,1247,623,363,182,91,4689\n"
                   "0.52,5677,3241,1621,944,472,236,12191\n"
                   "1,10917,6234,3117,1816,908,454,23446\n");
}

TEST_CASE("cli coverage equals a single-point sweep")
{
    auto const cov = run({"coverage", "--d1", "3000", "--alpha", "1"});
    auto const sw = run({"sweep", "--var", "d1", "--start", "3000", "--stop", "3000", "--step", "1", "--alpha", "1"});
    CHECK(cov.status == kExitOk);
    CHECK(sw.status == kExitOk);
    CHECK(cov.out == sw.out);
    CHECK(cov.out == "x,h1,q1,q2,c1,c1_sic\n"
                     "3000,0.9041341309,0.5407497421,0.1848069348,0.4889102981,0.6560005554\n");

    // unit load is the default when nothing sets the intensity
    CHECK(run({"coverage", "--d1", "3000"}).out == cov.out);
}

TEST_CASE("cli sweep with Monte Carlo is byte-stable")
{
    std::vector<char const*> args{"sweep", "--var", "alpha", "--start", "0.2", "--stop", "1", "--step", "0.4",
                                  "--mc-trials", "5000", "--seed", "42"};
    auto const a = run(args);
    args.push_back("--workers");
    args.push_back("4");
    auto const b = run(args);
    CHECK(a.status == kExitOk);
    CHECK(a.out == b.out);
    CHECK(a.out.rfind("x,h1,q1,q2,c1,c1_sic,mc_c1,mc_c1_ci95,mc_c1_sic,mc_c1_sic_ci95\n", 0) == 0);
}

TEST_CASE("cli exit statuses")
{
    CHECK(run({}).status == kExitUsage);
    CHECK(run({"bogus"}).status == kExitUsage);
    CHECK(run({"coverage"}).status == kExitUsage);
    CHECK(run({"--set", "path_loss_exp=1.5", "table1"}).status == kExitUsage);
    CHECK(run({"--config", "/nonexistent/file.cfg", "table1"}).status == kExitUsage);
    CHECK(run({"capacity", "--alphas", "0.2,x"}).status == kExitUsage);
    CHECK(run({"coverage", "--d1", "5000"}).status == kExitCompute);
    CHECK(run({"plan", "--target", "0.95"}).status == kExitCompute);
    CHECK(run({"--help"}).status == kExitOk);
}

TEST_CASE("cli plan and table1")
{
    auto const plan = run({"plan", "--target", "0.8", "--sic"});
    CHECK(plan.status == kExitOk);
    CHECK(plan.out.rfind("target,sic,alpha,objective\n0.8,1,0.5095808", 0) == 0);

    auto const t1 = run({"table1"});
    CHECK(t1.status == kExitOk);
    CHECK(t1.out.find("12,991.23,0.29,-137,-20,0.0011014\n") != std::string::npos);

    auto const mc = run({"mc", "--d1", "3000", "--trials", "20000", "--seed", "5"});
    CHECK(mc.status == kExitOk);
    CHECK(mc.out.find("single_interferer,") != std::string::npos);
}
