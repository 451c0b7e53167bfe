#ifndef NOMA_SPECIAL_MATH_HPP
#define NOMA_SPECIAL_MATH_HPP

#include <functional>

namespace noma {

/// Mean of an exponentially distributed effective SNR, linear scale (not dB).
struct MeanSnr {
    double gamma_bar;
};

/// Standard normal CDF, P(Z <= z).
double phi(double z);

/// Gaussian tail probability Q(z) = P(Z > z) = 1 - phi(z).
double q_func(double z);

/// Complementary error function; erfc_func(x) = 2 * q_func(x * sqrt(2)).
double erfc_func(double x);

/// Antiderivative of erfc(sqrt(x)) * exp(-x/alpha), evaluated at x >= 0:
///   -alpha * erfc(sqrt(x)) * e^{-x/alpha}
///   - alpha * sqrt(alpha/(alpha+1)) * erf(sqrt((alpha+1) x / alpha))
/// The definite integral over [0, inf) is alpha * (1 - sqrt(alpha/(alpha+1))).
double erfc_exp_antiderivative(double x, double alpha);

/// E[Q(sqrt(gamma))] for gamma ~ Exponential(mean gamma_bar):
/// 0.5 * (1 - sqrt(gamma_bar / (gamma_bar + 2))).
double rayleigh_q_average(MeanSnr gamma_bar);

/// Numerically evaluates the expectation of `integrand` over the exponential
/// density with mean gamma_bar, i.e. (1/gamma_bar) * integral_0^inf
/// integrand(g) * exp(-g/gamma_bar) dg, to absolute tolerance <= 1e-10.
/// Test-side oracle; independent of the closed forms it checks.
double quadrature_expectation(const std::function<double(double)>& integrand,
                              MeanSnr gamma_bar);

}  // namespace noma

#endif
