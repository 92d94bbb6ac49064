// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "iqmirror/iqi.hpp"
#include "iqmirror/schemes.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace iqmirror {

enum class Metric { ser, outage };
const char* metric_name(Metric m) noexcept;

struct StoppingRule {
    std::uint64_t min_errors = 200; // >= 50 for CI validity
    std::uint64_t max_trials = 10'000'000;
};

struct Wilson {
    double lo = 0.0;
    double hi = 1.0;
};
/// Wilson score interval for events/trials at normal quantile z.
Wilson wilson_interval(std::uint64_t events, std::uint64_t trials, double z = 1.959963984540054);

struct MetricEstimate {
    double value = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t events = 0;
    double ci_lo = 0.0;
    double ci_hi = 1.0;
    bool below_resolution = false; // zero events at the trial cap
};

/// One grid point of a sweep.
struct PointSpec {
    SchemeId scheme = SchemeId::Ideal;
    int modulation = 4;
    IqiParams iqi;
    double irr_db = 0.0; // displayed IRR (dB); +inf for the ideal front end
    double snr_db = 0.0;
    double rate = 1.0;
};

/// Per-point stream key. Scheme and IRR are deliberately excluded so paired
/// schemes and IRR values share channel/data draws (common random numbers);
/// every marginal estimate stays unbiased with a valid CI.
std::uint64_t point_seed(std::uint64_t master_seed, Metric metric, int modulation,
                         double snr_db, double rate) noexcept;

/// Decision-level Monte Carlo: runs blocks until min_errors symbol errors or
/// the trial cap, counting one scored symbol per block. Deterministic for a
/// fixed seed at any worker count.
MetricEstimate estimate_ser(const PointSpec& pt, std::uint64_t master_seed,
                            const StoppingRule& stop, int workers);

/// SINR-threshold Monte Carlo: draws channels, computes the scheme's
/// instantaneous SINR/SNR and counts events below 2^R − 1 (rate-1) or
/// 2^(2R) − 1 (rate-1/2 chains).
MetricEstimate estimate_outage(const PointSpec& pt, std::uint64_t master_seed,
                               const StoppingRule& stop, int workers);

/// Closed-form reference for a grid point, when one exists.
///   published:  outage curves use the published identification
///               (chi-square scale = gbar_id for the rate-1/2 pair codes);
///   simulation: scale = gbar_id/2, matching the equal-total-power chains
///               the Monte Carlo engine runs.
/// SER references always use the equal-power scale and exact conditional-SER
/// averaging (the single-erfc QPSK constant is an upper bound, ~10-16% above
/// the symbol-error average at low SNR).
enum class AnalyticConvention { published, simulation };
std::optional<double> analytic_value(Metric metric, const PointSpec& pt,
                                     AnalyticConvention conv,
                                     bool corrected_qam_coef = true);

// ---- Validation -------------------------------------------------------------

enum class PointStatus { pass, warn, fail, inconclusive, no_reference };

/// Per-point verdict: PASS when analytic·(1±band) intersects the 95% Wilson
/// CI, WARN when within 3.89 binomial standard errors, FAIL beyond, and
/// inconclusive below 50 events.
PointStatus classify_against(const MetricEstimate& est, double analytic, double band,
                             double* z_out = nullptr);

struct ValidationPoint {
    PointSpec spec;
    Metric metric;
    MetricEstimate estimate;
    double analytic = 0.0;
    double band = 0.0; // relative tolerance band around the analytic value
    double z = 0.0;    // |estimate − analytic| in binomial standard errors
    PointStatus status = PointStatus::no_reference;
};

struct ValidationReport {
    std::vector<ValidationPoint> points;
    int passes = 0, warns = 0, fails = 0, inconclusive = 0;
    bool ok = false;
    std::string summary;
};

/// Compares Monte Carlo estimates against the closed forms. Per point: PASS
/// if the analytic value (±band) intersects the 95% Wilson CI, WARN if it
/// still lies within 3.89 binomial standard errors (99.99%), FAIL beyond
/// that. The report is ok when nothing fails hard and the 95% miss count
/// stays binomially consistent with nominal coverage (≤ max(2, 15%)).
/// Points with < 50 events are inconclusive ("CI too wide for validation").
ValidationReport validate_points(const std::vector<std::pair<Metric, PointSpec>>& pts,
                                 std::uint64_t master_seed, const StoppingRule& stop,
                                 int workers);

} // namespace iqmirror
