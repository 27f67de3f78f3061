// Seeded trial engine for the cascaded channel gain A = sum_ij delta_ij.
// Produces empirical outage, spectral efficiency and distribution
// diagnostics used to validate every closed form.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "risv2i/channel.hpp"

namespace risv2i::mc {

// One batch of independent cascaded-gain realizations. Regenerating with
// the same (seed, config) yields bit-identical samples regardless of how
// many worker threads were used.
struct TrialBatch {
    std::vector<double> samples;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::string config_digest;
    std::string generator;
};

struct SampleOptions {
    // Refuse runs with trials * M1 * M2 above this unless overridden.
    double max_budget = 1e10;
    bool override_budget = false;
    unsigned threads = 0;  // 0 = hardware concurrency
};

// Thrown when a requested run exceeds the trial budget guardrail.
class BudgetError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Each sample is an independent realization of the double sum of
// M1 * M2 i.i.d. Nakagami amplitudes. Cost is O(trials * M1 * M2).
TrialBatch sample_cascade(std::uint32_t m1, std::uint32_t m2, const channel::FadingParams& f,
                          std::uint64_t trials, std::uint64_t seed,
                          const SampleOptions& options = {});

struct Estimate {
    double value = 0.0;
    double std_err = 0.0;
};

// Fraction of samples below the amplitude threshold Upsilon_th derived
// from (budget, r_th), with its binomial standard error.
Estimate empirical_outage(const TrialBatch& batch, const channel::LinkBudget& budget,
                          double r_th_bpshz);

// Mean of log2(1 + A^2 B gamma_bar) over the batch with its standard
// error; single-pass streaming accumulation.
Estimate empirical_se(const TrialBatch& batch, const channel::LinkBudget& budget);

// Kolmogorov-Smirnov distance between the standardized samples and the
// standard normal CDF; quantifies how good the Gaussian approximation of
// A is at the batch's element counts. Requires trials >= 1e5.
double normality_diagnostic(const TrialBatch& batch);

}  // namespace risv2i::mc
