#include "risv2i/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <thread>

#include "risv2i/numerics.hpp"

namespace risv2i::mc {

namespace {

// Fixed shard granularity: substream k always covers trials
// [k * kShardTrials, ...), so results do not depend on worker count.
constexpr std::uint64_t kShardTrials = 1u << 14;

std::string make_digest(std::uint32_t m1, std::uint32_t m2, const channel::FadingParams& f) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "m1=%u;m2=%u;m=%.9g;omega=%.9g", m1, m2, f.m, f.omega);
    return buf;
}

void fill_shard(double* out, std::uint64_t count, std::uint32_t m1, std::uint32_t m2,
                const channel::FadingParams& f, std::uint64_t seed, std::uint64_t shard) {
    Xoshiro256pp rng = Xoshiro256pp::substream(seed, shard);
    channel::NakagamiSampler sampler(f);
    const std::uint64_t paths = static_cast<std::uint64_t>(m1) * m2;
    for (std::uint64_t t = 0; t < count; ++t) {
        double sum = 0.0;
        for (std::uint64_t p = 0; p < paths; ++p) {
            sum += sampler(rng);
        }
        out[t] = sum;
    }
}

}  // namespace

TrialBatch sample_cascade(std::uint32_t m1, std::uint32_t m2, const channel::FadingParams& f,
                          std::uint64_t trials, std::uint64_t seed,
                          const SampleOptions& options) {
    if (m1 < 1 || m2 < 1) throw std::domain_error("sample_cascade: element counts must be >= 1");
    if (trials < 1) throw std::domain_error("sample_cascade: trials must be >= 1");
    channel::validate(f);

    const double cost = static_cast<double>(trials) * static_cast<double>(m1) * m2;
    if (cost > options.max_budget && !options.override_budget) {
        char msg[160];
        std::snprintf(msg, sizeof(msg),
                      "sample_cascade: trials*M1*M2 = %.3g exceeds budget %.3g "
                      "(pass override to force)",
                      cost, options.max_budget);
        throw BudgetError(msg);
    }

    TrialBatch batch;
    batch.trials = trials;
    batch.seed = seed;
    batch.config_digest = make_digest(m1, m2, f);
    batch.generator = Xoshiro256pp::name();
    batch.samples.resize(trials);

    const std::uint64_t shards = (trials + kShardTrials - 1) / kShardTrials;
    unsigned workers = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, shards));

    if (workers <= 1) {
        for (std::uint64_t k = 0; k < shards; ++k) {
            const std::uint64_t begin = k * kShardTrials;
            const std::uint64_t count = std::min(kShardTrials, trials - begin);
            fill_shard(batch.samples.data() + begin, count, m1, m2, f, seed, k);
        }
    } else {
        std::atomic<std::uint64_t> next_shard{0};
        auto worker = [&] {
            for (;;) {
                const std::uint64_t k = next_shard.fetch_add(1);
                if (k >= shards) return;
                const std::uint64_t begin = k * kShardTrials;
                const std::uint64_t count = std::min(kShardTrials, trials - begin);
                fill_shard(batch.samples.data() + begin, count, m1, m2, f, seed, k);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return batch;
}

Estimate empirical_outage(const TrialBatch& batch, const channel::LinkBudget& budget,
                          double r_th_bpshz) {
    if (batch.samples.empty()) throw std::domain_error("empirical_outage: empty batch");
    const double threshold = channel::rate_threshold_amplitude(budget, r_th_bpshz);
    std::uint64_t below = 0;
    for (double a : batch.samples) {
        if (a < threshold) ++below;
    }
    const double n = static_cast<double>(batch.samples.size());
    const double p = static_cast<double>(below) / n;
    return Estimate{p, std::sqrt(p * (1.0 - p) / n)};
}

Estimate empirical_se(const TrialBatch& batch, const channel::LinkBudget& budget) {
    if (batch.samples.empty()) throw std::domain_error("empirical_se: empty batch");
    const double snr_scale = budget.gain_b * budget.gamma_bar;
    // Welford running mean/variance over the rate samples.
    double mean = 0.0;
    double m2 = 0.0;
    std::uint64_t n = 0;
    for (double a : batch.samples) {
        const double rate = std::log2(1.0 + a * a * snr_scale);
        ++n;
        const double delta = rate - mean;
        mean += delta / static_cast<double>(n);
        m2 += delta * (rate - mean);
    }
    const double variance = n > 1 ? m2 / static_cast<double>(n - 1) : 0.0;
    return Estimate{mean, std::sqrt(variance / static_cast<double>(n))};
}

double normality_diagnostic(const TrialBatch& batch) {
    const std::uint64_t n = batch.samples.size();
    if (n < 100000) {
        throw std::domain_error("normality_diagnostic: needs at least 1e5 trials");
    }
    double mean = 0.0;
    for (double a : batch.samples) mean += a;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (double a : batch.samples) var += (a - mean) * (a - mean);
    var /= static_cast<double>(n - 1);
    const double sd = std::sqrt(var);

    std::vector<double> sorted = batch.samples;
    std::sort(sorted.begin(), sorted.end());

    double distance = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) {
        const double z = (sorted[i] - mean) / sd;
        const double cdf = 1.0 - numerics::q_function(z);
        const double hi = static_cast<double>(i + 1) / static_cast<double>(n) - cdf;
        const double lo = cdf - static_cast<double>(i) / static_cast<double>(n);
        distance = std::max({distance, hi, lo});
    }
    return distance;
}

}  // namespace risv2i::mc
