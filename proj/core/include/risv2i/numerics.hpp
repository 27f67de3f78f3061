// Special functions shared by the closed-form performance expressions.
#pragma once

namespace risv2i::numerics {

// Gaussian tail probability Q(x) = P[Z > x] for standard normal Z,
// computed as erfc(x / sqrt(2)) / 2. Throws std::domain_error for
// non-finite input. Accurate to ~1e-15 relative over |x| <= 8 and
// underflows gracefully to 0 for very large x.
double q_function(double x);

// Gamma(m + 1/2) / Gamma(m), evaluated in log space so large shape
// parameters (m >> 170) do not overflow. Throws std::domain_error for
// m <= 0. The result lies in (0, sqrt(m)).
double gamma_ratio(double m);

// exp(x) * E1(x) for x > 0, where E1 is the exponential integral
// int_1^inf exp(-x t)/t dt. The scaled form stays finite for large x
// (exp(x) alone overflows past x ~ 709). Series expansion below x = 1,
// modified Lentz continued fraction above. Throws std::domain_error
// for x <= 0.
double exp_e1(double x);

}  // namespace risv2i::numerics
