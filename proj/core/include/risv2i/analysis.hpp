// Closed-form performance expressions: Gaussian approximation of the
// cascaded gain, outage probability, spectral-efficiency bounds, the
// large-M approximation, the SRAT/DCT baselines and energy efficiency.
#pragma once

#include <cstdint>

#include "risv2i/channel.hpp"

namespace risv2i::analysis {

// Mean and standard deviation of the CLT-approximated cascaded gain
// A = sum_ij delta_ij (or B = sum_i beta_i for a single RIS).
struct GaussianApprox {
    double mu_a = 0.0;
    double sigma_a = 0.0;
};

// Dual-RIS cascade: mu_A = M1 M2 mu_ij, sigma_A^2 = M1 M2 sigma_ij^2.
GaussianApprox gaussian_approx(std::uint32_t m1, std::uint32_t m2,
                               const channel::FadingParams& f);

// Single-RIS sum of N amplitudes: mu_B = N mu_i, sigma_B^2 = N sigma_i^2.
GaussianApprox srat_stats(std::uint32_t n, const channel::FadingParams& f);

// CDF of the approximated cascaded gain: 0 for y <= 0, otherwise
// 1 - Q((y - mu_A) / sigma_A).
double cdf_cascade(double y, const GaussianApprox& g);

// Closed-form outage probability at rate threshold r_th:
// F_A(sqrt((2^r_th - 1) / (B gamma_bar))).
double outage_probability(const channel::LinkBudget& budget, const GaussianApprox& g,
                          double r_th_bpshz);

// Jensen upper bound log2(1 + gamma_bar B E[A^2]), E[A^2] = sigma^2 + mu^2.
double se_upper(const channel::LinkBudget& budget, const GaussianApprox& g);

// Same bound written out in element counts and fading shape; must agree
// with se_upper to ~1e-12 (guards transcription of either form).
double se_upper_expanded(const channel::LinkBudget& budget, std::uint32_t m1, std::uint32_t m2,
                         const channel::FadingParams& f);

// Jensen lower bound log2(1 + gamma_bar B / E[1/A^2]) with the Taylor
// approximation E[1/A^2] ~ 1/E[A^2] + Var[A^2]/E[A^2]^3 and the
// non-central chi-square moments of A^2.
double se_lower(const channel::LinkBudget& budget, const GaussianApprox& g);

// Fully expanded lower-bound expression; must agree with se_lower.
double se_lower_expanded(const channel::LinkBudget& budget, std::uint32_t m1, std::uint32_t m2,
                         const channel::FadingParams& f);

// Large-element approximation both bounds converge to:
// log2(1 + gamma_bar B (M1^2 M2^2 omega / m) (Gamma(m+1/2)/Gamma(m))^2).
double se_approx_large_m(const channel::LinkBudget& budget, std::uint32_t m1, std::uint32_t m2,
                         const channel::FadingParams& f);

// Ergodic SE of the direct Rayleigh link with mean SNR rho =
// B gamma_bar omega: exp(1/rho) E1(1/rho) / ln 2. Throws for rho <= 0.
double dct_se(const channel::LinkBudget& budget, double omega = 1.0);

// SE divided by total consumed power (1+xi) Pt + Pv + n Pris + Pbs.
// total_elements is M1+M2 for DRAT, N for SRAT and 0 for DCT.
double energy_efficiency(double se_bpshz, const channel::PowerModel& pm,
                         std::uint32_t total_elements);

// Monte Carlo estimate of the exact SE integral; the reference the
// closed forms are judged against. Deterministic per (trials, seed).
double se_exact_mc_reference(const channel::LinkBudget& budget, std::uint32_t m1,
                             std::uint32_t m2, const channel::FadingParams& f,
                             std::uint64_t trials, std::uint64_t seed);

}  // namespace risv2i::analysis
