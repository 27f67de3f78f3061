#include "risv2i/numerics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace risv2i::numerics {

double q_function(double x) {
    if (!std::isfinite(x)) {
        throw std::domain_error("q_function: argument must be finite");
    }
    return 0.5 * std::erfc(x * 0.7071067811865475244);  // 1/sqrt(2)
}

double gamma_ratio(double m) {
    if (!(m > 0.0)) {
        throw std::domain_error("gamma_ratio: shape must be positive");
    }
    return std::exp(std::lgamma(m + 0.5) - std::lgamma(m));
}

namespace {

// E1 power series: -gamma - ln(x) + sum_{k>=1} (-1)^{k+1} x^k / (k k!),
// good for small x; the caller multiplies by exp(x).
double e1_series(double x) {
    constexpr double kEulerGamma = 0.57721566490153286061;
    double sum = -kEulerGamma - std::log(x);
    double term = 1.0;
    for (int k = 1; k <= 60; ++k) {
        term *= -x / k;
        const double add = -term / k;
        sum += add;
        if (std::abs(add) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

// Modified Lentz evaluation of the continued fraction
//   exp(x) E1(x) = 1 / (x + 1 - 1/(x + 3 - 4/(x + 5 - 9/(...))))
double e1_continued_fraction_scaled(double x) {
    constexpr double kTiny = 1e-300;
    double b = x + 1.0;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= 200; ++i) {
        const double a = -static_cast<double>(i) * static_cast<double>(i);
        b += 2.0;
        d = 1.0 / (a * d + b);
        c = b + a / c;
        const double delta = c * d;
        h *= delta;
        if (std::abs(delta - 1.0) < 1e-16) break;
    }
    return h;
}

}  // namespace

double exp_e1(double x) {
    if (!(x > 0.0) || !std::isfinite(x)) {
        throw std::domain_error("exp_e1: argument must be positive and finite");
    }
    if (x < 1.0) {
        return std::exp(x) * e1_series(x);
    }
    return e1_continued_fraction_scaled(x);
}

}  // namespace risv2i::numerics
