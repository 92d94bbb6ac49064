// SPDX-License-Identifier: Apache-2.0
#include "iqmirror/csv.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace iqmirror {

std::string format_number(double v) {
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

namespace {

void append_common(std::ostringstream& os, const PointSpec& pt, Metric metric) {
    os << scheme_name(pt.scheme) << ',';
    if (metric == Metric::ser)
        os << pt.modulation;
    else
        os << '-';
    os << ',' << format_number(pt.irr_db) << ',' << format_number(pt.snr_db) << ','
       << format_number(pt.rate) << ',' << metric_name(metric) << ',';
}

} // namespace

std::string analytic_csv(const SweepConfig& cfg, bool corrected_qam_coef) {
    std::ostringstream os;
    os << "scheme,modulation,irr_db,snr_db,rate,metric,value\n";
    for (Metric metric : cfg.metrics())
        for (SchemeId scheme : cfg.schemes)
            for (const auto& [db, params] : cfg.iqi_list())
                for (double rate : cfg.rates)
                    for (double snr : cfg.snr_db) {
                        PointSpec pt;
                        pt.scheme = scheme;
                        pt.modulation = cfg.modulation;
                        pt.iqi = params;
                        pt.irr_db = db;
                        pt.snr_db = snr;
                        pt.rate = rate;
                        const auto v = analytic_value(metric, pt, AnalyticConvention::published,
                                                      corrected_qam_coef);
                        if (!v)
                            continue;
                        append_common(os, pt, metric);
                        os << format_number(*v) << '\n';
                    }
    return os.str();
}

std::string sweep_csv(const SweepConfig& cfg, int workers) {
    std::ostringstream os;
    os << "scheme,modulation,irr_db,snr_db,rate,metric,value,ci_lo,ci_hi,trials,events,flag\n";
    for (Metric metric : cfg.metrics())
        for (const PointSpec& pt : config_points(cfg)) {
            const MetricEstimate est = metric == Metric::ser
                                           ? estimate_ser(pt, cfg.seed, cfg.stopping, workers)
                                           : estimate_outage(pt, cfg.seed, cfg.stopping, workers);
            append_common(os, pt, metric);
            os << format_number(est.value) << ',' << format_number(est.ci_lo) << ','
               << format_number(est.ci_hi) << ',' << est.trials << ',' << est.events << ','
               << (est.below_resolution ? "floor-below-resolution" : "") << '\n';
        }
    return os.str();
}

std::string validation_text(const ValidationReport& rep) {
    std::ostringstream os;
    for (const auto& p : rep.points) {
        os << scheme_name(p.spec.scheme) << " M=" << p.spec.modulation
           << " irr=" << format_number(p.spec.irr_db) << "dB snr=" << format_number(p.spec.snr_db)
           << "dB rate=" << format_number(p.spec.rate) << " " << metric_name(p.metric) << ": ";
        switch (p.status) {
        case PointStatus::pass:
        case PointStatus::warn:
        case PointStatus::fail:
            os << (p.status == PointStatus::pass ? "PASS"
                                                 : (p.status == PointStatus::warn ? "WARN" : "FAIL"))
               << "  mc=" << format_number(p.estimate.value) << " ci=["
               << format_number(p.estimate.ci_lo) << ", " << format_number(p.estimate.ci_hi)
               << "] analytic=" << format_number(p.analytic);
            if (p.band > 0.0)
                os << " (±" << format_number(100.0 * p.band) << "% band)";
            if (p.status != PointStatus::pass)
                os << " z=" << format_number(p.z);
            break;
        case PointStatus::inconclusive:
            os << "INCONCLUSIVE  CI too wide for validation (events="
               << p.estimate.events << ", trials=" << p.estimate.trials << ")";
            break;
        case PointStatus::no_reference:
            os << "SKIP  no closed form for this point";
            break;
        }
        os << '\n';
    }
    os << "validation: " << rep.summary << " -> " << (rep.ok ? "OK" : "FAILED") << '\n';
    return os.str();
}

std::vector<std::pair<Metric, PointSpec>> validation_points_from_config(const SweepConfig& cfg) {
    std::vector<std::pair<Metric, PointSpec>> pts;
    for (Metric metric : cfg.metrics())
        for (const PointSpec& pt : config_points(cfg))
            pts.emplace_back(metric, pt);
    return pts;
}

} // namespace iqmirror
