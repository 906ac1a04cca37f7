#pragma once

namespace lorasic {

/// 2F1(1, b; 1+b; z) for 0 < b <= 1 and z <= 0.
///
/// Uses the Maclaurin series near the origin, the Pfaff transformation
/// z -> z/(z-1) for moderate |z| and the expansion in 1/z beyond that.
/// Relative accuracy is about 1e-14 over the whole half-line.
/// Throws std::domain_error outside the supported family and
/// ConvergenceError if a series fails to settle within 1e5 terms.
double hyp2f1_1b(double b, double z);

/// (2 d1^eta / (hi^2 - lo^2)) * integral_lo^hi x / (d1^eta + gamma x^eta) dx,
/// evaluated by adaptive Gauss-Kronrod quadrature to 1e-10 relative.
///
/// This is the geometric expectation behind the SIC capture probability
/// without its alpha e^-alpha factor; it is kept as an oracle for the
/// hypergeometric closed form.
double q2_integral_quadrature(double d1, double gamma, double eta, double l_lo, double l_hi);

} // namespace lorasic
