#include "lorasic/specfun.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "lorasic/errors.hpp"

namespace lorasic {
namespace {

constexpr int kMaxTerms = 100000;
constexpr double kSeriesEps = 1e-16;

// sum_{n>=0} b/(b+n) z^n, |z| <= 1/2
double maclaurin(double b, double z)
{
    double sum = 1.0;
    double power = 1.0;
    for (int n = 1; n < kMaxTerms; ++n)
    {
        power *= z;
        double const term = b * power / (b + n);
        sum += term;
        if (std::abs(term) < kSeriesEps * std::abs(sum))
            return sum;
    }
    throw ConvergenceError("hyp2f1_1b: Maclaurin series did not converge");
}

// (1-z)^-1 2F1(1, 1; 1+b; z/(z-1)); the transformed argument lies in [1/3, 2/3]
double pfaff(double b, double z)
{
    double const w = z / (z - 1.0);
    double sum = 1.0;
    double term = 1.0;
    for (int n = 0; n < kMaxTerms; ++n)
    {
        term *= (n + 1.0) / (n + 1.0 + b) * w;
        sum += term;
        if (term < kSeriesEps * sum)
            return sum / (1.0 - z);
    }
    throw ConvergenceError("hyp2f1_1b: Pfaff series did not converge");
}

// s - sin(s), accurate for small s
double s_minus_sin(double s)
{
    if (s > 0.5)
        return s - std::sin(s);
    double const s2 = s * s;
    double term = s * s2 / 6.0;
    double sum = term;
    for (int k = 2; k < 12; ++k)
    {
        term *= -s2 / ((2.0 * k) * (2.0 * k + 1.0));
        sum += term;
    }
    return sum;
}

// z = -x with x > 2. From b int_0^1 t^(b-1)/(1+xt) dt split at t = 1:
//   F = b pi x^-b / sin(pi b) - (b/x) sum_{n>=0} (-1/x)^n / (n+1-b).
// The first two pieces cancel as b -> 1; with eps = 1 - b they combine into
//   (b/x) [pi expm1(eps ln x) / sin(pi eps) + (pi eps - sin(pi eps)) / (eps sin(pi eps))]
// whose eps -> 0 limit is (b/x) ln x.
double large_argument(double b, double x)
{
    double const eps = 1.0 - b;
    double const log_x = std::log(x);
    double head;
    if (eps < 1e-12)
    {
        head = log_x;
    }
    else
    {
        double const s = std::numbers::pi * eps;
        double const sin_s = std::sin(s);
        head = std::numbers::pi * std::expm1(eps * log_x) / sin_s + s_minus_sin(s) / (eps * sin_s);
    }

    double tail = 0.0;
    double power = 1.0;
    for (int n = 1; n < kMaxTerms; ++n)
    {
        power *= -1.0 / x;
        double const term = power / (n + 1.0 - b);
        tail += term;
        if (std::abs(term) < kSeriesEps * std::abs(head - tail))
            return b / x * (head - tail);
    }
    throw ConvergenceError("hyp2f1_1b: inverse-argument series did not converge");
}

} // namespace

double hyp2f1_1b(double b, double z)
{
    if (!(b > 0.0 && b <= 1.0))
        throw std::domain_error("hyp2f1_1b: b must lie in (0, 1], got " + std::to_string(b));
    if (!(z <= 0.0) || std::isinf(z))
        throw std::domain_error("hyp2f1_1b: z must be finite and <= 0, got " + std::to_string(z));

    if (z == 0.0)
        return 1.0;
    if (z >= -0.5)
        return maclaurin(b, z);
    if (z >= -2.0)
        return pfaff(b, z);
    return large_argument(b, -z);
}

double q2_integral_quadrature(double d1, double gamma, double eta, double l_lo, double l_hi)
{
    if (!(d1 > 0.0) || !(gamma > 0.0) || !(eta >= 2.0))
        throw std::invalid_argument("q2_integral_quadrature: need d1 > 0, gamma > 0, eta >= 2");
    if (!(l_lo >= 0.0 && l_lo < l_hi))
        throw std::invalid_argument("q2_integral_quadrature: need 0 <= l_lo < l_hi");

    // 2 d1^eta x / (d1^eta + gamma x^eta) rewritten to keep powers bounded
    auto integrand = [=](double x) { return 2.0 * x / (1.0 + gamma * std::pow(x / d1, eta)); };

    constexpr double tol = 1e-10;
    double error = 0.0;
    double const integral = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
        integrand, l_lo, l_hi, 30, tol, &error);
    if (error > tol * std::abs(integral))
        throw ConvergenceError("q2_integral_quadrature: tolerance not reached (error estimate " +
                               std::to_string(error) + ")");
    return integral / (l_hi * l_hi - l_lo * l_lo);
}

} // namespace lorasic
