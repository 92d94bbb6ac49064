// SPDX-License-Identifier: Apache-2.0
#include "iqmirror/engine.hpp"

#include "iqmirror/analytics.hpp"
#include "iqmirror/constellation.hpp"
#include "iqmirror/special.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

namespace iqmirror {

const char* metric_name(Metric m) noexcept {
    return m == Metric::ser ? "ser" : "outage";
}

Wilson wilson_interval(std::uint64_t events, std::uint64_t trials, double z) {
    if (trials == 0)
        return {0.0, 1.0};
    const double n = static_cast<double>(trials);
    const double p = static_cast<double>(events) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    const double center = (p + z2 / (2.0 * n)) / denom;
    const double rad = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / denom;
    Wilson w{std::max(0.0, center - rad), std::min(1.0, center + rad)};
    if (events == 0)
        w.lo = 0.0; // one-sided
    if (events == trials)
        w.hi = 1.0;
    return w;
}

std::uint64_t point_seed(std::uint64_t master_seed, Metric metric, int modulation,
                         double snr_db, double rate) noexcept {
    SeedChain c;
    c.absorb(master_seed)
        .absorb(static_cast<std::uint64_t>(metric == Metric::ser ? 0x5e5 : 0x007))
        .absorb(static_cast<std::uint64_t>(modulation))
        .absorb(snr_db)
        .absorb(rate);
    return c.value();
}

namespace {

constexpr std::uint64_t kBatch = 16384;

struct BatchCounts {
    std::uint64_t trials = 0;
    std::uint64_t events = 0;
};

/// Runs Bernoulli trials in fixed batches. Batches execute in waves of
/// `workers`, results accumulate in batch order and the stopping rule is
/// evaluated at batch boundaries, so the outcome is a pure function of
/// (seed, stopping rule) at any worker count.
template <typename TrialFn>
MetricEstimate run_bernoulli(std::uint64_t pseed, const StoppingRule& stop, int workers,
                             TrialFn&& trial) {
    workers = std::max(1, workers);
    const std::uint64_t max_trials = std::max<std::uint64_t>(1, stop.max_trials);
    const std::uint64_t n_batches = (max_trials + kBatch - 1) / kBatch;

    auto run_batch = [&](std::uint64_t b) {
        const std::uint64_t lo = b * kBatch;
        const std::uint64_t hi = std::min(lo + kBatch, max_trials);
        BatchCounts counts;
        counts.trials = hi - lo;
        for (std::uint64_t t = lo; t < hi; ++t) {
            RandomStream rng = trial_stream(pseed, t);
            counts.events += trial(rng) ? 1u : 0u;
        }
        return counts;
    };

    std::uint64_t events = 0, trials = 0;
    for (std::uint64_t wave = 0; wave < n_batches;) {
        const std::uint64_t wave_n =
            std::min<std::uint64_t>(static_cast<std::uint64_t>(workers), n_batches - wave);
        std::vector<BatchCounts> results(wave_n);
        if (wave_n == 1 || workers == 1) {
            for (std::uint64_t i = 0; i < wave_n; ++i)
                results[i] = run_batch(wave + i);
        } else {
            std::vector<std::thread> pool;
            pool.reserve(wave_n);
            for (std::uint64_t i = 0; i < wave_n; ++i)
                pool.emplace_back([&, i] { results[i] = run_batch(wave + i); });
            for (auto& th : pool)
                th.join();
        }
        bool done = false;
        for (const auto& r : results) {
            events += r.events;
            trials += r.trials;
            if (events >= stop.min_errors) {
                done = true;
                break;
            }
        }
        if (done)
            break;
        wave += wave_n;
    }

    MetricEstimate est;
    est.trials = trials;
    est.events = events;
    est.value = trials ? static_cast<double>(events) / static_cast<double>(trials) : 0.0;
    const Wilson w = wilson_interval(events, trials);
    est.ci_lo = w.lo;
    est.ci_hi = w.hi;
    est.below_resolution = (events == 0 && trials >= max_trials);
    return est;
}

} // namespace

MetricEstimate estimate_ser(const PointSpec& pt, std::uint64_t master_seed,
                            const StoppingRule& stop, int workers) {
    const std::uint64_t pseed =
        point_seed(master_seed, Metric::ser, pt.modulation, pt.snr_db, pt.rate);
    const Constellation& cons = Constellation::of_order(pt.modulation);
    return run_bernoulli(pseed, stop, workers, [&](RandomStream& rng) {
        return run_block(pt.scheme, rng, pt.iqi, pt.snr_db, cons).symbol_error;
    });
}

MetricEstimate estimate_outage(const PointSpec& pt, std::uint64_t master_seed,
                               const StoppingRule& stop, int workers) {
    const std::uint64_t pseed =
        point_seed(master_seed, Metric::outage, pt.modulation, pt.snr_db, pt.rate);
    const double threshold = outage_threshold(pt.scheme, pt.rate);
    return run_bernoulli(pseed, stop, workers, [&](RandomStream& rng) {
        const MirrorPairChannel ch = sample_block_channel(rng);
        return instantaneous_snr(pt.scheme, ch, pt.iqi, pt.snr_db) < threshold;
    });
}

std::optional<double> analytic_value(Metric metric, const PointSpec& pt,
                                     AnalyticConvention conv, bool corrected_qam_coef) {
    const double gbar = db_to_linear(pt.snr_db);
    const double irr = irr_linear(pt.iqi);
    if (metric == Metric::outage) {
        switch (pt.scheme) {
        case SchemeId::Ideal:
        case SchemeId::ZfCompensated:
            return outage_ideal(gbar, pt.rate);
        case SchemeId::IqiUncompensated:
            return std::isinf(irr) ? outage_ideal(gbar, pt.rate)
                                   : outage_iqi(gbar, pt.rate, irr);
        case SchemeId::Iqsc:
        case SchemeId::AIqsc:
            return outage_iqsc(conv == AnalyticConvention::published ? gbar : gbar / 2.0,
                               pt.rate);
        case SchemeId::RcMrc:
            return std::nullopt;
        }
        return std::nullopt;
    }
    switch (pt.scheme) {
    case SchemeId::Ideal:
    case SchemeId::ZfCompensated:
        return ser_exact_rayleigh(gbar, pt.modulation);
    case SchemeId::Iqsc:
    case SchemeId::AIqsc:
        return ser_exact_dual(gbar / 2.0, pt.modulation);
    case SchemeId::IqiUncompensated:
        if (pt.modulation == 2 || std::isinf(irr))
            return std::nullopt; // no closed form for BPSK under IQI
        return ser_iqi_qam(gbar, pt.modulation, irr,
                           corrected_qam_coef ? QamSerCoefficient::corrected
                                              : QamSerCoefficient::uncorrected);
    case SchemeId::RcMrc:
        return std::nullopt;
    }
    return std::nullopt;
}

PointStatus classify_against(const MetricEstimate& est, double analytic, double band,
                             double* z_out) {
    if (z_out)
        *z_out = 0.0;
    if (est.events < 50)
        return PointStatus::inconclusive; // CI too wide for validation
    const double a_lo = analytic * (1.0 - band);
    const double a_hi = analytic * (1.0 + band);
    const double n = static_cast<double>(est.trials);
    const double p = est.value;
    const double se = std::sqrt(std::max(p * (1.0 - p) / n, 1e-300));
    const double dist = std::max({a_lo - p, p - a_hi, 0.0});
    if (z_out)
        *z_out = dist / se;
    if (a_hi >= est.ci_lo && a_lo <= est.ci_hi)
        return PointStatus::pass;
    return dist / se <= 3.89 ? PointStatus::warn : PointStatus::fail;
}

ValidationReport validate_points(const std::vector<std::pair<Metric, PointSpec>>& pts,
                                 std::uint64_t master_seed, const StoppingRule& stop,
                                 int workers) {
    ValidationReport rep;
    for (const auto& [metric, spec] : pts) {
        ValidationPoint vp;
        vp.metric = metric;
        vp.spec = spec;
        const auto ref = analytic_value(metric, spec, AnalyticConvention::simulation);
        vp.estimate = metric == Metric::ser ? estimate_ser(spec, master_seed, stop, workers)
                                            : estimate_outage(spec, master_seed, stop, workers);
        if (!ref) {
            vp.status = PointStatus::no_reference;
            rep.points.push_back(vp);
            continue;
        }
        vp.analytic = *ref;
        vp.band = spec.scheme == SchemeId::AIqsc ? 0.10 : 0.0; // approximation band
        vp.status = classify_against(vp.estimate, vp.analytic, vp.band, &vp.z);
        switch (vp.status) {
        case PointStatus::pass: ++rep.passes; break;
        case PointStatus::warn: ++rep.warns; break;
        case PointStatus::fail: ++rep.fails; break;
        default: ++rep.inconclusive; break;
        }
        rep.points.push_back(vp);
    }
    const int decided = rep.passes + rep.warns;
    const int warn_budget = std::max(2, (decided * 15 + 99) / 100);
    rep.ok = rep.fails == 0 && rep.warns <= warn_budget;
    std::ostringstream os;
    os << rep.passes << " pass, " << rep.warns << " warn (budget " << warn_budget << "), "
       << rep.fails << " fail, " << rep.inconclusive << " inconclusive";
    rep.summary = os.str();
    return rep;
}

} // namespace iqmirror
