#include "risv2i/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "risv2i/montecarlo.hpp"
#include "risv2i/numerics.hpp"

namespace risv2i::analysis {

namespace {

double product_count(std::uint32_t m1, std::uint32_t m2) {
    return static_cast<double>(m1) * static_cast<double>(m2);
}

double log2_1p(double x) { return std::log1p(x) * 1.4426950408889634074; }  // 1/ln 2

}  // namespace

GaussianApprox gaussian_approx(std::uint32_t m1, std::uint32_t m2,
                               const channel::FadingParams& f) {
    if (m1 < 1 || m2 < 1) throw std::domain_error("gaussian_approx: counts must be >= 1");
    const auto moments = channel::nakagami_moments(f);
    const double paths = product_count(m1, m2);
    return GaussianApprox{paths * moments.mean, std::sqrt(paths * moments.variance)};
}

GaussianApprox srat_stats(std::uint32_t n, const channel::FadingParams& f) {
    return gaussian_approx(n, 1, f);
}

double cdf_cascade(double y, const GaussianApprox& g) {
    if (y <= 0.0) return 0.0;
    return 1.0 - numerics::q_function((y - g.mu_a) / g.sigma_a);
}

double outage_probability(const channel::LinkBudget& budget, const GaussianApprox& g,
                          double r_th_bpshz) {
    if (!(r_th_bpshz > 0.0)) throw std::domain_error("outage_probability: r_th must be > 0");
    return cdf_cascade(channel::rate_threshold_amplitude(budget, r_th_bpshz), g);
}

double se_upper(const channel::LinkBudget& budget, const GaussianApprox& g) {
    const double second_moment = g.sigma_a * g.sigma_a + g.mu_a * g.mu_a;
    return log2_1p(budget.gamma_bar * budget.gain_b * second_moment);
}

double se_upper_expanded(const channel::LinkBudget& budget, std::uint32_t m1, std::uint32_t m2,
                         const channel::FadingParams& f) {
    const double ratio = numerics::gamma_ratio(f.m);
    const double k = ratio * ratio / f.m;
    const double paths = product_count(m1, m2);
    const double gain = paths * f.omega * (1.0 + (paths - 1.0) * k);
    return log2_1p(budget.gamma_bar * budget.gain_b * gain);
}

double se_lower(const channel::LinkBudget& budget, const GaussianApprox& g) {
    const double var_a = g.sigma_a * g.sigma_a;
    const double second_moment = var_a + g.mu_a * g.mu_a;
    const double var_a2 = 2.0 * var_a * (var_a + 2.0 * g.mu_a * g.mu_a);
    const double inv_a2 = 1.0 / second_moment + var_a2 / (second_moment * second_moment * second_moment);
    return log2_1p(budget.gamma_bar * budget.gain_b / inv_a2);
}

double se_lower_expanded(const channel::LinkBudget& budget, std::uint32_t m1, std::uint32_t m2,
                         const channel::FadingParams& f) {
    const double ratio = numerics::gamma_ratio(f.m);
    const double k = ratio * ratio / f.m;
    const double paths = product_count(m1, m2);
    const double one_plus = 1.0 + (paths - 1.0) * k;
    const double numerator = paths * f.omega * one_plus * one_plus * one_plus;
    const double denominator =
        2.0 * (1.0 + (2.0 * paths - 1.0) * k) * (1.0 - k) + one_plus * one_plus;
    return log2_1p(budget.gamma_bar * budget.gain_b * numerator / denominator);
}

double se_approx_large_m(const channel::LinkBudget& budget, std::uint32_t m1, std::uint32_t m2,
                         const channel::FadingParams& f) {
    channel::validate(f);
    const double ratio = numerics::gamma_ratio(f.m);
    const double paths = product_count(m1, m2);
    const double gain = paths * paths * f.omega / f.m * ratio * ratio;
    return log2_1p(budget.gamma_bar * budget.gain_b * gain);
}

double dct_se(const channel::LinkBudget& budget, double omega) {
    const double rho = budget.gain_b * budget.gamma_bar * omega;
    if (!(rho > 0.0)) throw std::domain_error("dct_se: mean SNR must be positive");
    return numerics::exp_e1(1.0 / rho) * 1.4426950408889634074;
}

double energy_efficiency(double se_bpshz, const channel::PowerModel& pm,
                         std::uint32_t total_elements) {
    if (!(se_bpshz >= 0.0)) throw std::domain_error("energy_efficiency: SE must be >= 0");
    const double total_w = (1.0 + pm.xi) * pm.pt_w + pm.pv_circuit_w +
                           static_cast<double>(total_elements) * pm.pris_element_w +
                           pm.pbs_circuit_w;
    if (!(total_w > 0.0)) throw std::domain_error("energy_efficiency: total power must be positive");
    return se_bpshz / total_w;
}

double se_exact_mc_reference(const channel::LinkBudget& budget, std::uint32_t m1,
                             std::uint32_t m2, const channel::FadingParams& f,
                             std::uint64_t trials, std::uint64_t seed) {
    if (trials < 10000) {
        throw std::domain_error("se_exact_mc_reference: needs at least 1e4 trials");
    }
    const auto batch = mc::sample_cascade(m1, m2, f, trials, seed);
    return mc::empirical_se(batch, budget).value;
}

}  // namespace risv2i::analysis
