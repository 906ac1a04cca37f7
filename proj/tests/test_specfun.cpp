#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "lorasic/errors.hpp"
#include "lorasic/specfun.hpp"

using namespace lorasic;

namespace {

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

// 2F1(1, b; 1+b; z) = int_0^1 ds / (1 - z s^(1/b)) after t = s^(1/b) in the
// Euler integral; split where the integrand turns over.
double euler_integral(double b, double z)
{
    boost::math::quadrature::tanh_sinh<double> integrator;
    auto f = [=](double s) { return 1.0 / (1.0 - z * std::pow(s, 1.0 / b)); };
    double const knee = std::min(0.5, std::pow(1.0 / std::abs(z), b));
    return integrator.integrate(f, 0.0, knee, 1e-14) + integrator.integrate(f, knee, 1.0, 1e-14);
}

// (1-z)^-1 2F1(1, 1; 1+b; z/(z-1)) summed term by term in long double.
double pfaff_series(double b, double z)
{
    long double const w = static_cast<long double>(z) / (z - 1.0L);
    long double sum = 1.0L;
    long double comp = 0.0L;
    long double term = 1.0L;
    for (long n = 0; n < 400'000'000L; ++n)
    {
        term *= (n + 1.0L) / (n + 1.0L + b) * w;
        long double const y = term - comp;
        long double const t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (term / (1.0L - w) < 1e-15L * sum)
            break;
    }
    return static_cast<double>(sum / (1.0L - z));
}

} // namespace

TEST_CASE("hyp2f1_1b reference values")
{
    double const b = 2.0 / 2.8;
    CHECK(hyp2f1_1b(b, 0.0) == 1.0);
    CHECK(hyp2f1_1b(0.3, 0.0) == 1.0);
    CHECK(hyp2f1_1b(1.0, -1.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));

    // 30-digit values
    struct Case { double b, z, want; };
    Case const cases[] = {
        {b, -0.3, 0.89447696835122292258},
        {b, -0.5, 0.84014126026515775196},
        {b, -0.75, 0.78416268924055257513},
        {b, -1.0, 0.73780910226340791956},
        {b, -2.0, 0.60908760215191150868},
        {b, -2.5, 0.5648085303411143452},
        {b, -10.0, 0.30940767761660899056},
        {b, -1234.5, 0.015745798436130179727},
        {b, -1e6, 0.00014616009242783321783},
        {b, -1e9, 1.0673853826756901927e-6},
        {0.2, -3.0, 0.7849801034829692256},
        {0.2, -1e4, 0.16939363795981820935},
        {0.5, -3.0, 0.60459978807807261686},
        {0.5, -1e4, 0.01560796660108231381},
        {0.999999, -3.0, 0.46209830473378656035},
        {0.999999, -1e4, 0.00092104752166564123829},
        {1.0, -3.0, 0.46209812037329687294},
        {1.0, -1e4, 0.00092104403669765160444},
    };
    for (auto const& c : cases)
    {
        CAPTURE(c.b);
        CAPTURE(c.z);
        CHECK(rel_err(hyp2f1_1b(c.b, c.z), c.want) < 1e-13);
    }
}

TEST_CASE("hyp2f1_1b at eta = 2 is the logarithm")
{
    for (double z : {-1e-3, -0.4, -0.9, -1.5, -2.0, -7.0, -300.0, -1e7})
        CHECK(rel_err(hyp2f1_1b(1.0, z), std::log1p(-z) / -z) < 1e-13);
}

TEST_CASE("hyp2f1_1b matches the Euler integral")
{
    double const b = 2.0 / 2.8;
    CHECK(rel_err(hyp2f1_1b(b, -1e6), euler_integral(b, -1e6)) < 1e-8);
    for (double bb : {0.15, 0.5, 2.0 / 2.8, 0.9})
        for (double z : {-0.2, -0.6, -1.9, -2.1, -40.0, -5e4})
        {
            CAPTURE(bb);
            CAPTURE(z);
            CHECK(rel_err(hyp2f1_1b(bb, z), euler_integral(bb, z)) < 1e-10);
        }
}

TEST_CASE("Pfaff identity holds across the half-line")
{
    for (double b : {0.25, 2.0 / 2.8, 0.95})
        for (double z : {-0.01, -0.3, -0.5, -0.51, -1.0, -2.0, -2.01, -17.0, -1e3, -1e4, -1e5, -1e6})
        {
            CAPTURE(b);
            CAPTURE(z);
            CHECK(rel_err(hyp2f1_1b(b, z), pfaff_series(b, z)) < 1e-9);
        }
}

TEST_CASE("hyp2f1_1b is in (0, 1] and decreasing in |z|")
{
    for (double b : {0.1, 0.4, 2.0 / 2.8, 2.0 / 2.1, 1.0})
    {
        double prev = hyp2f1_1b(b, 0.0);
        for (double x = 1e-4; x < 1e8; x *= 1.13)
        {
            double const f = hyp2f1_1b(b, -x);
            CHECK(f > 0.0);
            CHECK(f <= 1.0);
            CHECK(f < prev);
            prev = f;
        }
    }
}

TEST_CASE("hyp2f1_1b domain")
{
    CHECK_THROWS_AS(hyp2f1_1b(0.5, 0.1), std::domain_error);
    CHECK_THROWS_AS(hyp2f1_1b(0.0, -1.0), std::domain_error);
    CHECK_THROWS_AS(hyp2f1_1b(1.2, -1.0), std::domain_error);
    CHECK_THROWS_AS(hyp2f1_1b(0.5, std::nan("")), std::domain_error);
    CHECK_THROWS_AS(hyp2f1_1b(0.5, -INFINITY), std::domain_error);
}

TEST_CASE("q2 quadrature limits and the eta = 2 antiderivative")
{
    CHECK(q2_integral_quadrature(3000.0, 1e12, 2.8, 2500.0, 3000.0) < 1e-11);
    double const tiny = q2_integral_quadrature(1e-6, 1.26, 2.8, 2500.0, 3000.0);
    CHECK(tiny < 1e-25);
    CHECK(q2_integral_quadrature(0.5e-6, 1.26, 2.8, 2500.0, 3000.0) / tiny ==
          doctest::Approx(std::pow(2.0, -2.8)).epsilon(1e-8));

    std::mt19937_64 gen(11);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int n = 0; n < 200; ++n)
    {
        double const lo = 3000.0 * unit(gen);
        double const hi = lo + 10.0 + 1000.0 * unit(gen);
        double const d1 = 1.0 + 4000.0 * unit(gen);
        double const gamma = 0.1 + 20.0 * unit(gen);
        // int x / (d1^2 + gamma x^2) dx = ln(d1^2 + gamma x^2) / (2 gamma)
        double const want =
            d1 * d1 / (gamma * (hi * hi - lo * lo)) * std::log((d1 * d1 + gamma * hi * hi) / (d1 * d1 + gamma * lo * lo));
        CHECK(rel_err(q2_integral_quadrature(d1, gamma, 2.0, lo, hi), want) < 1e-9);
    }
}

TEST_CASE("closed form bracket equals the quadrature")
{
    std::mt19937_64 gen(5);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int n = 0; n < 300; ++n)
    {
        double const lo = 2500.0 * unit(gen);
        double const hi = lo + 50.0 + 950.0 * unit(gen);
        double const d1 = lo + (hi - lo) * (1.0 - unit(gen));
        double const gamma = 0.5 + 9.5 * unit(gen);
        double const eta = 2.05 + 2.5 * unit(gen);
        double const b = 2.0 / eta;
        auto term = [&](double l) { return l == 0.0 ? 0.0 : l * l * hyp2f1_1b(b, -gamma * std::pow(l / d1, eta)); };
        double const closed = (term(hi) - term(lo)) / (hi * hi - lo * lo);
        CHECK(rel_err(closed, q2_integral_quadrature(d1, gamma, eta, lo, hi)) < 1e-8);
    }
}

TEST_CASE("q2 quadrature preconditions")
{
    CHECK_THROWS_AS(q2_integral_quadrature(0.0, 1.0, 2.8, 0.0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(q2_integral_quadrature(1.0, 0.0, 2.8, 0.0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(q2_integral_quadrature(1.0, 1.0, 1.5, 0.0, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(q2_integral_quadrature(1.0, 1.0, 2.8, 10.0, 10.0), std::invalid_argument);
}
