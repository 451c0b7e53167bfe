#include "noma/special_math.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace noma {

namespace {

void require_finite(double v, const char* what) {
    if (std::isnan(v)) {
        throw std::domain_error(std::string(what) + ": NaN argument");
    }
}

}  // namespace

double phi(double z) {
    require_finite(z, "phi");
    // erfc keeps precision in the lower tail where 1 - q would cancel.
    return 0.5 * std::erfc(-z / std::numbers::sqrt2);
}

double q_func(double z) {
    require_finite(z, "q_func");
    return 0.5 * std::erfc(z / std::numbers::sqrt2);
}

double erfc_func(double x) {
    require_finite(x, "erfc_func");
    return std::erfc(x);
}

double erfc_exp_antiderivative(double x, double alpha) {
    if (!(alpha > 0.0)) {
        throw std::domain_error("erfc_exp_antiderivative: alpha must be > 0");
    }
    if (!(x >= 0.0)) {
        throw std::domain_error("erfc_exp_antiderivative: x must be >= 0");
    }
    const double ratio = std::sqrt(alpha / (alpha + 1.0));
    if (std::isinf(x)) {
        return -alpha * ratio;  // erfc(inf) = 0, erf(inf) = 1
    }
    const double sx = std::sqrt(x);
    return -alpha * std::erfc(sx) * std::exp(-x / alpha)
           - alpha * ratio * std::erf(std::sqrt((alpha + 1.0) / alpha * x));
}

double rayleigh_q_average(MeanSnr gamma_bar) {
    const double gb = gamma_bar.gamma_bar;
    if (!(gb >= 0.0)) {
        throw std::domain_error("rayleigh_q_average: gamma_bar must be >= 0");
    }
    return 0.5 * (1.0 - std::sqrt(gb / (gb + 2.0)));
}

double quadrature_expectation(const std::function<double(double)>& integrand,
                              MeanSnr gamma_bar) {
    const double gb = gamma_bar.gamma_bar;
    if (!(gb > 0.0)) {
        throw std::domain_error("quadrature_expectation: gamma_bar must be > 0");
    }
    // Substituting g = gb*t maps the density to exp(-t) on [0, inf).
    boost::math::quadrature::exp_sinh<double> integrator;
    double error = 0.0;
    double l1 = 0.0;
    const double value = integrator.integrate(
        [&](double t) { return integrand(gb * t) * std::exp(-t); }, 1e-12,
        &error, &l1);
    const double abs_err = error * l1;
    if (!(abs_err <= 1e-10)) {
        std::ostringstream msg;
        msg << "quadrature_expectation: achieved tolerance " << abs_err
            << " exceeds 1e-10";
        throw std::runtime_error(msg.str());
    }
    return value;
}

}  // namespace noma
