#include "risv2i/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "risv2i/numerics.hpp"

namespace risv2i::channel {

double dbm_to_watt(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double watt_to_dbm(double watt) {
    if (!(watt > 0.0)) throw std::domain_error("watt_to_dbm: power must be positive");
    return 10.0 * std::log10(watt) + 30.0;
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) {
    if (!(linear > 0.0)) throw std::domain_error("linear_to_db: value must be positive");
    return 10.0 * std::log10(linear);
}

void validate(const FadingParams& f) {
    if (!(f.m >= 0.5)) throw std::domain_error("fading.m: shape must be >= 0.5");
    if (!(f.omega > 0.0)) throw std::domain_error("fading.omega: spread must be positive");
}

void validate(const Geometry& g) {
    if (!(g.d1_m > 0.0)) throw std::domain_error("geometry.d1_m: distance must be positive");
    if (!(g.d_rr_m > 0.0)) throw std::domain_error("geometry.d_rr_m: distance must be positive");
    if (!(g.d2_m > 0.0)) throw std::domain_error("geometry.d2_m: distance must be positive");
}

void validate(const PowerModel& p) {
    if (!(p.pt_w > 0.0)) throw std::domain_error("power.pt: transmit power must be positive");
    if (!(p.xi >= 0.0)) throw std::domain_error("power.xi: HPA overhead must be >= 0");
    if (!(p.pv_circuit_w > 0.0)) throw std::domain_error("power.v_circuit: must be positive");
    if (!(p.pbs_circuit_w > 0.0)) throw std::domain_error("power.bs_circuit: must be positive");
    if (!(p.pris_element_w > 0.0)) throw std::domain_error("power.ris_element: must be positive");
}

const char* to_string(Scenario s) {
    switch (s) {
        case Scenario::kDrat: return "drat";
        case Scenario::kSrat: return "srat";
        case Scenario::kDct: return "dct";
    }
    return "?";
}

void validate(const ScenarioConfig& c) {
    validate(c.geometry);
    validate(c.fading);
    validate(c.direct_fading);
    validate(c.power);
    if (c.m1_count < 1 || c.m2_count < 1) {
        throw std::domain_error("elements.m1/m2: counts must be >= 1");
    }
    if (c.n_count < 1) throw std::domain_error("elements.n: count must be >= 1");
    if (!(c.noise_w > 0.0)) throw std::domain_error("power.noise: noise power must be positive");
}

ScenarioConfig srat_benchmark_of(const ScenarioConfig& drat) {
    ScenarioConfig c = drat;
    c.kind = Scenario::kSrat;
    c.n_count = drat.m1_count + drat.m2_count;
    return c;
}

double pathloss_db(double distance_m, bool line_of_sight) {
    if (!(distance_m > 0.0)) {
        throw std::domain_error("pathloss_db: distance must be positive");
    }
    const double log_d = std::log10(distance_m);
    return line_of_sight ? -37.5 - 22.0 * log_d : -35.1 - 36.7 * log_d;
}

double composite_gain(const ScenarioConfig& c) {
    const Geometry& g = c.geometry;
    switch (c.kind) {
        case Scenario::kDrat:
            return db_to_linear(pathloss_db(g.d1_m, true) + pathloss_db(g.d_rr_m, true) +
                                pathloss_db(g.d2_m, true));
        case Scenario::kSrat:
            return db_to_linear(pathloss_db(g.d1_m + g.d_rr_m, true) + pathloss_db(g.d2_m, true));
        case Scenario::kDct:
            return db_to_linear(pathloss_db(g.d1_m + g.d_rr_m + g.d2_m, false));
    }
    throw std::logic_error("composite_gain: unknown scenario");
}

LinkBudget make_link_budget(const ScenarioConfig& c) {
    validate(c);
    return LinkBudget{composite_gain(c), c.power.pt_w / c.noise_w, c.noise_w};
}

LinkBudget make_link_budget(const ScenarioConfig& c, double pt_dbm_override) {
    ScenarioConfig tmp = c;
    tmp.power.pt_w = dbm_to_watt(pt_dbm_override);
    return make_link_budget(tmp);
}

double rate_threshold_amplitude(const LinkBudget& budget, double r_th_bpshz) {
    if (!(r_th_bpshz >= 0.0)) {
        throw std::domain_error("rate_threshold_amplitude: threshold must be >= 0");
    }
    const double snr_scale = budget.gain_b * budget.gamma_bar;
    if (!(snr_scale > 0.0)) {
        throw std::domain_error("rate_threshold_amplitude: B * gamma_bar must be positive");
    }
    return std::sqrt((std::exp2(r_th_bpshz) - 1.0) / snr_scale);
}

AmplitudeMoments nakagami_moments(const FadingParams& f) {
    validate(f);
    const double ratio = numerics::gamma_ratio(f.m);
    const double mean = ratio * std::sqrt(f.omega / f.m);
    const double variance = f.omega * (1.0 - ratio * ratio / f.m);
    return AmplitudeMoments{mean, variance};
}

NakagamiSampler::NakagamiSampler(const FadingParams& f) {
    validate(f);
    shape_ = f.m;
    scale_ = f.omega / f.m;
    shape_below_one_ = shape_ < 1.0;
    inv_shape_ = 1.0 / shape_;
    const double boosted = shape_below_one_ ? shape_ + 1.0 : shape_;
    mt_d_ = boosted - 1.0 / 3.0;
    mt_c_ = 1.0 / std::sqrt(9.0 * mt_d_);
}

double NakagamiSampler::next_normal(Xoshiro256pp& rng) {
    if (has_spare_) {
        has_spare_ = false;
        return spare_normal_;
    }
    const double u1 = rng.next_open_double();
    const double u2 = rng.next_double();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.283185307179586477 * u2;
    spare_normal_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

// Marsaglia-Tsang squeeze method; shapes below 1 use the gamma(shape+1)
// boost followed by a U^(1/shape) correction.
double NakagamiSampler::next_gamma(Xoshiro256pp& rng) {
    for (;;) {
        double x;
        double v;
        do {
            x = next_normal(rng);
            v = 1.0 + mt_c_ * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = rng.next_open_double();
        const double x2 = x * x;
        if (u < 1.0 - 0.0331 * x2 * x2) {
            return mt_d_ * v;
        }
        if (std::log(u) < 0.5 * x2 + mt_d_ * (1.0 - v + std::log(v))) {
            return mt_d_ * v;
        }
    }
}

double NakagamiSampler::operator()(Xoshiro256pp& rng) {
    double g = next_gamma(rng);
    if (shape_below_one_) {
        g *= std::pow(rng.next_open_double(), inv_shape_);
    }
    return std::sqrt(g * scale_);
}

double sample_nakagami(const FadingParams& f, Xoshiro256pp& rng) {
    NakagamiSampler sampler(f);
    return sampler(rng);
}

}  // namespace risv2i::channel
