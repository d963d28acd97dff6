#pragma once

namespace fracbem {

/// Euler–Mascheroni constant.
inline constexpr double euler_gamma = 0.57721566490153286061;

/// Gamma function for positive arguments. Throws std::domain_error for x <= 0.
double gamma(double x);

/// Modified Bessel function K0(x), x > 0. Relative accuracy better than
/// 1e-10 on [1e-6, 50]. Throws std::domain_error for x <= 0.
double bessel_k0(double x);

/// Modified Bessel function K1(x), x > 0. Same contract as bessel_k0.
double bessel_k1(double x);

/// Closed form of the singular element integral
///   integral of ln|s| over s in [-length/2, +length/2]
///     = length * (ln(length/2) - 1).
/// Used for the diagonal of single-layer matrices on straight elements.
double log_element_integral(double length);

} // namespace fracbem
