// Pathloss model, Nakagami-m per-element statistics and the scenario
// geometry that composes them into an end-to-end link budget.
#pragma once

#include <cstdint>
#include <string>

#include "risv2i/rng.hpp"

namespace risv2i::channel {

// ---------------------------------------------------------------------------
// Unit conversions. Fixed convention: P[W] = 10^((P[dBm] - 30) / 10).

double dbm_to_watt(double dbm);
double watt_to_dbm(double watt);
double db_to_linear(double db);
double linear_to_db(double linear);

// ---------------------------------------------------------------------------
// Domain types.

// Nakagami-m small-scale fading for one link class: shape m >= 0.5 and
// spread omega = E[amplitude^2] > 0.
struct FadingParams {
    double m = 1.0;
    double omega = 1.0;
};

void validate(const FadingParams& f);

// V -> RIS-1 -> RIS-2 -> BS segment lengths in meters.
struct Geometry {
    double d1_m = 5.0;
    double d_rr_m = 100.0;
    double d2_m = 5.0;
};

void validate(const Geometry& g);

// Consumed-power terms of the energy-efficiency model. All in watts except
// the dimensionless HPA overhead factor xi (total HPA draw = (1+xi) Pt).
struct PowerModel {
    double pt_w = 1.0;
    double xi = 0.2;
    double pv_circuit_w = 0.01;
    double pbs_circuit_w = 0.01;
    double pris_element_w = 0.01;
};

void validate(const PowerModel& p);

enum class Scenario { kDrat, kSrat, kDct };

const char* to_string(Scenario s);

// One evaluated deployment: scenario kind, geometry, element counts,
// fading classes, powers and the noise floor.
struct ScenarioConfig {
    Scenario kind = Scenario::kDrat;
    Geometry geometry{};
    std::uint32_t m1_count = 10;  // RIS-1 reflecting units
    std::uint32_t m2_count = 10;  // RIS-2 reflecting units
    std::uint32_t n_count = 20;   // single large RIS (SRAT)
    FadingParams fading{10.0, 1.0};
    FadingParams direct_fading{1.0, 1.0};
    PowerModel power{};
    double noise_w = 1e-15;  // -120 dBm
};

void validate(const ScenarioConfig& c);

// SRAT benchmark of a dual-RIS deployment: one large RIS with
// N = M1 + M2 units, same geometry/fading/power.
ScenarioConfig srat_benchmark_of(const ScenarioConfig& drat);

// Composite pathloss B (linear), transmit SNR gamma_bar = Pt / noise
// (linear) and the noise power they were derived from.
struct LinkBudget {
    double gain_b = 0.0;
    double gamma_bar = 0.0;
    double noise_w = 0.0;
};

LinkBudget make_link_budget(const ScenarioConfig& c);
LinkBudget make_link_budget(const ScenarioConfig& c, double pt_dbm_override);

// Amplitude threshold Upsilon_th = sqrt((2^r_th - 1) / (B gamma_bar)):
// the cascaded gain below which the instantaneous rate drops under r_th.
double rate_threshold_amplitude(const LinkBudget& budget, double r_th_bpshz);

// ---------------------------------------------------------------------------
// Operations.

// 3 GHz urban pathloss in dB: LOS -37.5 - 22 log10(d), NLOS -35.1 -
// 36.7 log10(d), d in meters. Throws std::domain_error for d <= 0.
double pathloss_db(double distance_m, bool line_of_sight);

// End-to-end linear power gain for a scenario:
//   DRAT  B_LOS(d1) * B_LOS(d_rr) * B_LOS(d2)
//   SRAT  B_LOS(d1 + d_rr) * B_LOS(d2)
//   DCT   B_NLOS(d1 + d_rr + d2)
double composite_gain(const ScenarioConfig& c);

// Mean and variance of a Nakagami-m amplitude. Satisfies mu^2 + var = omega.
struct AmplitudeMoments {
    double mean = 0.0;
    double variance = 0.0;
};

AmplitudeMoments nakagami_moments(const FadingParams& f);

// Stateful Nakagami-m amplitude sampler: square root of a gamma variate
// with shape m and scale omega/m. Keeps the spare Box-Muller normal, so
// draws are cheapest when the sampler object is reused across a batch.
class NakagamiSampler {
public:
    explicit NakagamiSampler(const FadingParams& f);

    double operator()(Xoshiro256pp& rng);

private:
    double next_normal(Xoshiro256pp& rng);
    double next_gamma(Xoshiro256pp& rng);

    double shape_;
    double scale_;
    double mt_d_;  // Marsaglia-Tsang d = shape' - 1/3
    double mt_c_;  // Marsaglia-Tsang c = 1/sqrt(9 d)
    bool shape_below_one_;
    double inv_shape_;
    double spare_normal_ = 0.0;
    bool has_spare_ = false;
};

// One amplitude draw; convenience wrapper over a fresh NakagamiSampler.
double sample_nakagami(const FadingParams& f, Xoshiro256pp& rng);

}  // namespace risv2i::channel
