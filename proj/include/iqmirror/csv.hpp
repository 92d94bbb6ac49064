// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "iqmirror/engine.hpp"
#include "iqmirror/sweep_config.hpp"

#include <string>
#include <vector>

namespace iqmirror {

/// Numbers are serialized with 9 significant digits; +inf prints as "inf".
std::string format_number(double v);

/// Closed-form curves. One row per (metric, scheme, irr, rate, snr):
///   scheme,modulation,irr_db,snr_db,rate,metric,value
/// Outage rows leave modulation as "-". Rows without a closed form are
/// skipped. Rate-1/2 outage curves use the published identification.
std::string analytic_csv(const SweepConfig& cfg, bool corrected_qam_coef = true);

/// Monte Carlo estimates:
///   scheme,modulation,irr_db,snr_db,rate,metric,value,ci_lo,ci_hi,trials,events,flag
/// flag is "" normally and "floor-below-resolution" for zero events at the
/// trial cap. Deterministic for (config, seed) at any worker count.
std::string sweep_csv(const SweepConfig& cfg, int workers);

/// Human-readable validation report.
std::string validation_text(const ValidationReport& rep);

/// Validation points implied by a sweep config (schemes x iqi x snr x metrics).
std::vector<std::pair<Metric, PointSpec>> validation_points_from_config(const SweepConfig& cfg);

} // namespace iqmirror
