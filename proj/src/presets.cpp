// SPDX-License-Identifier: Apache-2.0
#include "iqmirror/presets.hpp"

#include <cmath>
#include <numbers>

namespace iqmirror {

namespace {

std::vector<double> grid(double lo, double hi, double step) {
    std::vector<double> g;
    for (double v = lo; v <= hi + 1e-9; v += step)
        g.push_back(v);
    return g;
}

/// Amplitude mismatch realizing a target IRR at a fixed phase mismatch:
/// (1 − 2εcosφ + ε²) = 10^(−irr/10)·(1 + 2εcosφ + ε²).
SweepConfig& with_mismatch_for_irr(SweepConfig& cfg, double irr_db, double phi_deg) {
    const double q2 = std::pow(10.0, -irr_db / 10.0);
    const double c = std::cos(phi_deg * std::numbers::pi / 180.0);
    const double a = c * (1.0 + q2) / (1.0 - q2);
    cfg.explicit_mismatch = true;
    cfg.epsilon = a - std::sqrt(a * a - 1.0);
    cfg.phi_deg = phi_deg;
    return cfg;
}

std::vector<Preset> build_presets() {
    std::vector<Preset> out;
    const std::vector<double> irr_set = {20.0, 25.0, 30.0, 35.0};
    const std::vector<SchemeId> outage_schemes = {SchemeId::Ideal, SchemeId::IqiUncompensated,
                                                  SchemeId::Iqsc};

    {
        Preset p;
        p.name = "fig3-outage-vs-rate";
        p.description = "analytic outage vs transmission rate, SNR 35 dB, IRR {20,25,30,35} dB";
        SweepConfig c;
        c.schemes = outage_schemes;
        c.irr_db = irr_set;
        c.snr_db = {35.0};
        c.rates = grid(0.5, 6.0, 0.25);
        c.metric = MetricSelection::outage;
        p.configs = {c};
        out.push_back(std::move(p));
    }
    {
        Preset p;
        p.name = "fig4-outage";
        p.description = "analytic outage vs SNR, rates 1 and 2 bit/s/Hz, IRR {20,25,30,35} dB";
        SweepConfig c;
        c.schemes = outage_schemes;
        c.irr_db = irr_set;
        c.snr_db = grid(0.0, 40.0, 2.5);
        c.rates = {1.0, 2.0};
        c.metric = MetricSelection::outage;
        p.configs = {c};
        out.push_back(std::move(p));
    }
    {
        Preset p;
        p.name = "fig5-ser-qpsk-irr";
        p.description = "Monte Carlo QPSK SER vs SNR for IRR {20,25,30,35} dB";
        p.monte_carlo = true;
        SweepConfig c;
        c.schemes = outage_schemes;
        c.modulation = 4;
        c.irr_db = irr_set;
        c.snr_db = grid(0.0, 40.0, 5.0);
        c.metric = MetricSelection::ser;
        c.stopping.max_trials = 50'000'000;
        p.configs = {c};
        out.push_back(std::move(p));
    }
    {
        Preset p;
        p.name = "fig6-ser-modulations";
        p.description =
            "Monte Carlo SER vs SNR, BPSK/QPSK/16-QAM, all compensation chains, IRR 20 dB phi 5deg";
        p.monte_carlo = true;
        for (int m : {2, 4, 16}) {
            SweepConfig c;
            c.schemes = {SchemeId::Ideal, SchemeId::IqiUncompensated, SchemeId::ZfCompensated,
                         SchemeId::Iqsc, SchemeId::AIqsc};
            c.modulation = m;
            with_mismatch_for_irr(c, 20.0, 5.0);
            c.snr_db = grid(0.0, 40.0, 5.0);
            c.metric = MetricSelection::ser;
            c.stopping.max_trials = 20'000'000;
            p.configs.push_back(c);
        }
        out.push_back(std::move(p));
    }
    {
        Preset p;
        p.name = "fig7-ser-16qam-floors";
        p.description =
            "Monte Carlo 16-QAM SER floors: IQSC/A-IQSC/repetition coding, IRR 20 dB phi 5deg, "
            "plus repetition coding with an ideal front end";
        p.monte_carlo = true;
        SweepConfig c;
        c.schemes = {SchemeId::Iqsc, SchemeId::AIqsc, SchemeId::RcMrc};
        c.modulation = 16;
        with_mismatch_for_irr(c, 20.0, 5.0);
        c.snr_db = grid(0.0, 60.0, 5.0);
        c.metric = MetricSelection::ser;
        c.stopping.max_trials = 2'000'000;
        p.configs.push_back(c);
        SweepConfig ideal_rc = c;
        ideal_rc.schemes = {SchemeId::RcMrc};
        ideal_rc.explicit_mismatch = false;
        ideal_rc.irr_db = {std::numeric_limits<double>::infinity()};
        p.configs.push_back(ideal_rc);
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace

const std::vector<Preset>& all_presets() {
    static const std::vector<Preset> presets = build_presets();
    return presets;
}

const Preset* find_preset(const std::string& name) {
    for (const auto& p : all_presets())
        if (p.name == name)
            return &p;
    return nullptr;
}

StoppingRule default_validation_stopping() {
    return {200, 30'000'000};
}

std::vector<std::pair<Metric, PointSpec>> default_validation_points() {
    std::vector<std::pair<Metric, PointSpec>> pts;
    const auto add = [&](Metric metric, SchemeId s, int m, double irr_db, double snr,
                         double rate) {
        PointSpec p;
        p.scheme = s;
        p.modulation = m;
        p.irr_db = irr_db;
        p.iqi = params_for_irr(irr_db);
        p.snr_db = snr;
        p.rate = rate;
        pts.emplace_back(metric, p);
    };
    const double inf = std::numeric_limits<double>::infinity();

    // SER: full-rate chains across the grid; pair codes to 20 dB (their SER
    // falls with diversity two, keeping 200 events affordable)
    for (int m : {2, 4}) {
        for (double snr : grid(0.0, 30.0, 5.0)) {
            add(Metric::ser, SchemeId::Ideal, m, inf, snr, 1.0);
            add(Metric::ser, SchemeId::ZfCompensated, m, 25.0, snr, 1.0);
        }
        for (double snr : grid(0.0, 20.0, 5.0)) {
            add(Metric::ser, SchemeId::Iqsc, m, 35.0, snr, 1.0);
            add(Metric::ser, SchemeId::AIqsc, m, 20.0, snr, 1.0);
        }
    }
    // outage at 1 bit/s/Hz
    for (double snr : grid(0.0, 30.0, 5.0)) {
        add(Metric::outage, SchemeId::Ideal, 4, inf, snr, 1.0);
        add(Metric::outage, SchemeId::IqiUncompensated, 4, 20.0, snr, 1.0);
        add(Metric::outage, SchemeId::Iqsc, 4, 35.0, snr, 1.0);
        add(Metric::outage, SchemeId::AIqsc, 4, 20.0, snr, 1.0);
    }
    return pts;
}

} // namespace iqmirror
