// Flat key-value run configuration: one `section.key = value` per line,
// `#` comments, scalar or [list] values. Unknown keys and out-of-range
// values fail with the offending key path in the message.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "risv2i/channel.hpp"

namespace risv2i::cli {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Inclusive transmit-power sweep axis in dBm.
struct PtSweepAxis {
    double start_dbm = 0.0;
    double stop_dbm = 0.0;
    double step_db = 1.0;
};

std::vector<double> expand_pt_grid(const PtSweepAxis& axis);

// Scenario parameters plus evaluation knobs (rate threshold, Monte Carlo
// trial count and seed, optional sweep axes).
struct RunConfig {
    channel::ScenarioConfig scenario{};
    double r_th_bpshz = 5.0;
    std::uint64_t trials = 1'000'000;
    std::uint64_t seed = 1;
    bool trials_explicit = false;
    bool seed_explicit = false;
    std::optional<PtSweepAxis> pt_sweep;
    std::vector<std::uint32_t> element_sweep;
};

// Parse configuration text; `origin` names the source in error messages.
RunConfig parse_config(std::string_view text, std::string_view origin = "<config>");

// Load and parse a configuration file. Missing/unreadable file -> IoError.
RunConfig load_config(const std::string& path);

}  // namespace risv2i::cli
