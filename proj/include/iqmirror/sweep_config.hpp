// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "iqmirror/engine.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace iqmirror {

/// Configuration error naming the offending key; the CLI maps it to exit 2.
class ConfigError : public std::runtime_error {
public:
    ConfigError(std::string key, const std::string& message)
        : std::runtime_error("config key '" + key + "': " + message), key_(std::move(key)) {}
    const std::string& key() const noexcept { return key_; }

private:
    std::string key_;
};

enum class MetricSelection { ser, outage, both };

/// Flat sweep definition mirrored by the JSON config file.
struct SweepConfig {
    std::vector<SchemeId> schemes;
    int modulation = 4;
    std::vector<double> irr_db; // may hold +inf; exclusive with epsilon/phi
    bool explicit_mismatch = false;
    double epsilon = 1.0;
    double phi_deg = 0.0;
    std::vector<double> snr_db;
    std::vector<double> rates = {1.0};
    MetricSelection metric = MetricSelection::ser;
    std::uint64_t seed = 1;
    StoppingRule stopping;

    /// Resolved impairment list as (display irr_db, params) pairs.
    std::vector<std::pair<double, IqiParams>> iqi_list() const;
    std::vector<Metric> metrics() const;
};

/// Parses and validates the flat JSON sweep config. Unknown keys, empty
/// grids, unknown scheme names and an ambiguous irr/epsilon combination are
/// rejected with the offending key named.
SweepConfig parse_sweep_config(const std::string& json_text);

/// Expands a config into grid points (scheme x iqi x snr, first rate).
std::vector<PointSpec> config_points(const SweepConfig& cfg);

} // namespace iqmirror
