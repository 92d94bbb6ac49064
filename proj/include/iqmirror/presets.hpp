// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "iqmirror/sweep_config.hpp"

#include <string>
#include <vector>

namespace iqmirror {

/// Named figure-reproduction presets with every parameter pinned (rates, IRR
/// lists, modulation). Analytic presets emit closed-form curves, Monte Carlo
/// presets run sweeps.
struct Preset {
    std::string name;
    std::string description;
    bool monte_carlo = false;
    std::vector<SweepConfig> configs;
};

const std::vector<Preset>& all_presets();
const Preset* find_preset(const std::string& name);

/// Default analytics cross-validation suite: every scheme with an exact
/// closed form, SER (BPSK/QPSK) and outage across the SNR grid.
std::vector<std::pair<Metric, PointSpec>> default_validation_points();
StoppingRule default_validation_stopping();

} // namespace iqmirror
