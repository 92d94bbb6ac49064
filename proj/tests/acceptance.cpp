// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite: one check per reported headline result. Each criterion
// prints a single PASS/FAIL line with its measured numbers. Criteria taking
// Monte Carlo estimates run single-threaded with pinned seeds, so a verdict
// is reproducible bit for bit.
//
// Known-red criteria in this model (analysis in the repository notes):
//  - criterion 5 (repetition-coding floor): at IRR 20 dB the repetition-coded
//    self-interference-to-signal ratio is bounded by |k2/k1| = 0.1 for every
//    channel draw, strictly inside the 16-QAM decision distance (0.316), so
//    the noise-free error probability is exactly zero and no 5e-3 floor can
//    exist. The check is implemented as specified and reports the measured
//    upper bound.
//  - criterion 9b (equal-rate 16-QAM gain > 15 dB): the exact curves give
//    ~8 dB; a >15 dB gap is structurally incompatible with the ~5 dB gain of
//    criterion 9a because the two curve pairs shift commensurately under any
//    common normalization.

#include "iqmirror/analytics.hpp"
#include "iqmirror/csv.hpp"
#include "iqmirror/engine.hpp"
#include "iqmirror/special.hpp"
#include "iqmirror/sweep_config.hpp"

#include "testutil.hpp"

#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace iqmirror;

namespace {

constexpr std::uint64_t kSeed = 20260810;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, ...) {
    char buf[512];
    va_list ap;
    va_start(ap, f);
    std::vsnprintf(buf, sizeof buf, f, ap);
    va_end(ap);
    return buf;
}

PointSpec point(SchemeId s, int m, double irr_db, double snr_db, double rate = 1.0) {
    PointSpec p;
    p.scheme = s;
    p.modulation = m;
    p.irr_db = irr_db;
    p.iqi = params_for_irr(irr_db);
    p.snr_db = snr_db;
    p.rate = rate;
    return p;
}

// --- criterion 1: analytic outage ratios at 35 dB, rate 2, IRR 20 dB -------

Outcome criterion1() {
    const double gbar = db_to_linear(35.0);
    const double p_iqsc = outage_iqsc(gbar, 2.0); // published identification
    const double p_ideal = outage_ideal(gbar, 2.0);
    const double p_iqi = outage_iqi(gbar, 2.0, 100.0);
    const bool values_ok = std::abs(p_iqsc / 1.121448757746e-5 - 1.0) < 1e-6 &&
                           std::abs(p_ideal / 9.482334403192e-4 - 1.0) < 1e-6 &&
                           std::abs(p_iqi / 3.005603032292e-2 - 1.0) < 1e-6;
    const double below_ideal = 1.0 - p_iqsc / p_ideal;
    const double below_iqi = 1.0 - p_iqsc / p_iqi;
    Outcome r;
    r.pass = values_ok && below_ideal >= 0.988 && below_iqi >= 0.99;
    r.detail = fmt("outage(35dB,R=2): pair-code %.3e, single-branch %.3e, uncompensated %.3e; "
                   "pair-code %.2f%% below single-branch (need >=98.8), %.2f%% below "
                   "uncompensated (need >=99)",
                   p_iqsc, p_ideal, p_iqi, 100.0 * below_ideal, 100.0 * below_iqi);
    return r;
}

// --- criterion 2: Monte Carlo vs closed forms over the SNR grid ------------

Outcome criterion2() {
    int total = 0, in_ci = 0;
    double worst_z = 0.0;
    std::string worst;
    const auto tally = [&](const MetricEstimate& est, double analytic, const std::string& tag) {
        double z = 0.0;
        const PointStatus st = classify_against(est, analytic, 0.0, &z);
        ++total;
        if (st == PointStatus::pass)
            ++in_ci;
        if (z > worst_z) {
            worst_z = z;
            worst = tag;
        }
    };

    const StoppingRule ser_stop{200, 600'000'000};
    const StoppingRule out_stop{200, 200'000'000};
    for (int m : {2, 4}) {
        for (double snr = 0.0; snr <= 30.0; snr += 5.0) {
            const PointSpec ideal = point(SchemeId::Ideal, m, kInf, snr);
            tally(estimate_ser(ideal, kSeed, ser_stop, 1),
                  *analytic_value(Metric::ser, ideal, AnalyticConvention::simulation),
                  fmt("ser Ideal M%d %gdB", m, snr));
            const PointSpec iqsc = point(SchemeId::Iqsc, m, 35.0, snr);
            tally(estimate_ser(iqsc, kSeed, ser_stop, 1),
                  *analytic_value(Metric::ser, iqsc, AnalyticConvention::simulation),
                  fmt("ser Iqsc M%d %gdB", m, snr));
        }
    }
    for (double snr = 0.0; snr <= 30.0; snr += 5.0) {
        const PointSpec ideal = point(SchemeId::Ideal, 4, kInf, snr);
        tally(estimate_outage(ideal, kSeed, out_stop, 1),
              *analytic_value(Metric::outage, ideal, AnalyticConvention::simulation),
              fmt("outage Ideal %gdB", snr));
        const PointSpec iqsc = point(SchemeId::Iqsc, 4, 35.0, snr);
        tally(estimate_outage(iqsc, kSeed, out_stop, 1),
              *analytic_value(Metric::outage, iqsc, AnalyticConvention::simulation),
              fmt("outage Iqsc %gdB", snr));
    }

    Outcome r;
    const int misses = total - in_ci;
    r.pass = worst_z <= 3.89 && misses * 100 <= total * 15;
    r.detail = fmt("%d/%d points inside the 95%% Wilson CI of the closed form "
                   "(binomial budget allows %d misses); worst |z| = %.2f (%s), hard limit 3.89",
                   in_ci, total, total * 15 / 100, worst_z, worst.c_str());
    return r;
}

// --- criteria 3/4/5: high-SNR error floors ----------------------------------

Outcome floor_check(SchemeId scheme, int modulation, double target, const char* label,
                    const StoppingRule& stop) {
    const PointSpec pt = point(scheme, modulation, 20.0, 60.0);
    const MetricEstimate est = estimate_ser(pt, kSeed, stop, 1);
    Outcome r;
    r.pass = est.value >= target / 1.5 && est.value <= target * 1.5;
    r.detail = fmt("%s floor at 60 dB, IRR 20 dB: measured %.3e (events %llu / trials %llu), "
                   "target %.1e within x1.5 [%.2e, %.2e]",
                   label, est.value, static_cast<unsigned long long>(est.events),
                   static_cast<unsigned long long>(est.trials), target, target / 1.5,
                   target * 1.5);
    return r;
}

Outcome criterion3() {
    return floor_check(SchemeId::IqiUncompensated, 2, 2.5e-3, "uncompensated BPSK",
                       {500, 20'000'000});
}

Outcome criterion4() {
    return floor_check(SchemeId::IqiUncompensated, 16, 5e-2, "uncompensated 16-QAM",
                       {500, 1'000'000});
}

Outcome criterion5() {
    Outcome rc = floor_check(SchemeId::RcMrc, 16, 5e-3, "repetition-coding 16-QAM",
                             {200, 2'000'000});
    if (!rc.pass) {
        const PointSpec pt = point(SchemeId::RcMrc, 16, 20.0, 60.0);
        const MetricEstimate est = estimate_ser(pt, kSeed, {200, 2'000'000}, 1);
        rc.detail += fmt("; 95%% upper bound %.2e; the repetition-coded interference-to-signal "
                         "ratio is bounded by |k2/k1| = 0.1 < 0.316 (half the 16-QAM point "
                         "spacing), so this chain has no error floor at IRR 20 dB",
                         est.ci_hi);
    }
    const PointSpec iqsc = point(SchemeId::Iqsc, 16, 20.0, 60.0);
    const MetricEstimate est = estimate_ser(iqsc, kSeed, {200, 100'000}, 1);
    const bool no_floor = est.ci_hi < 1e-4;
    Outcome r;
    r.pass = rc.pass && no_floor;
    r.detail = rc.detail + fmt("; pair-code at the same settings: SER 95%% upper bound %.2e "
                               "(< 1e-4 required) -> no floor %s",
                               est.ci_hi, no_floor ? "confirmed" : "NOT confirmed");
    return r;
}

// --- criterion 6: IRR-independence of the pair code -------------------------

Outcome criterion6() {
    const std::vector<double> irrs = {20.0, 25.0, 30.0, 35.0};
    const StoppingRule stop{200, 5'000'000};
    bool all_overlap = true;
    double worst_gap = 0.0;
    std::string worst;
    for (double snr = 0.0; snr <= 20.0; snr += 4.0) {
        std::vector<MetricEstimate> est;
        for (double irr : irrs)
            est.push_back(estimate_ser(point(SchemeId::Iqsc, 4, irr, snr), kSeed, stop, 1));
        for (std::size_t i = 0; i < est.size(); ++i)
            for (std::size_t j = i + 1; j < est.size(); ++j) {
                const bool overlap =
                    est[i].ci_hi >= est[j].ci_lo && est[j].ci_hi >= est[i].ci_lo;
                if (!overlap) {
                    all_overlap = false;
                    worst = fmt("%gdB irr %g vs %g", snr, irrs[i], irrs[j]);
                }
                const double gap = std::abs(est[i].value - est[j].value) /
                                   std::max(est[i].value, 1e-300);
                if (gap > worst_gap)
                    worst_gap = gap;
            }
    }
    Outcome r;
    r.pass = all_overlap;
    r.detail = fmt("pair-code QPSK SER at IRR {20,25,30,35} dB over 0..20 dB: pairwise 95%% "
                   "CIs %s at every grid point (largest relative spread %.1f%%)%s",
                   all_overlap ? "overlap" : "DO NOT overlap", 100.0 * worst_gap,
                   all_overlap ? "" : (" first miss: " + worst).c_str());
    return r;
}

// --- criterion 7: single-slot variant tracks the two-slot code --------------

Outcome criterion7() {
    const StoppingRule stop{4000, 50'000'000};
    double worst = 0.0;
    std::string where;
    for (double snr = 0.0; snr <= 20.0; snr += 5.0) {
        const MetricEstimate a =
            estimate_ser(point(SchemeId::Iqsc, 4, 20.0, snr), kSeed, stop, 1);
        const MetricEstimate b =
            estimate_ser(point(SchemeId::AIqsc, 4, 20.0, snr), kSeed, stop, 1);
        const double rel = std::abs(b.value / a.value - 1.0);
        if (rel > worst) {
            worst = rel;
            where = fmt("%g dB", snr);
        }
    }
    Outcome r;
    r.pass = worst <= 0.10;
    r.detail = fmt("QPSK SER at IRR 20 dB, 0..20 dB: largest |single-slot/two-slot - 1| = "
                   "%.2f%% at %s (10%% allowed; common random numbers remove most Monte Carlo "
                   "noise from the ratio)",
                   100.0 * worst, where.c_str());
    return r;
}

// --- criterion 8: diversity order from the closed forms ---------------------

Outcome criterion8() {
    // least-squares slope of log10(SER) vs SNRdB over [25, 40]
    const auto slope = [](const std::function<double(double)>& f) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int n = 0;
        for (double db = 25.0; db <= 40.0 + 1e-9; db += 2.5) {
            const double y = std::log10(f(db));
            sx += db;
            sy += y;
            sxx += db * db;
            sxy += db * y;
            ++n;
        }
        return (n * sxy - sx * sy) / (n * sxx - sx * sx);
    };
    const double s_pair =
        slope([](double db) { return ser_iqsc(db_to_linear(db) / 2.0, ser_params_for(2)); });
    const double s_single =
        slope([](double db) { return ser_ideal(db_to_linear(db), ser_params_for(2)); });
    Outcome r;
    r.pass = std::abs(s_pair + 0.2) <= 0.01 && std::abs(s_single + 0.1) <= 0.01;
    r.detail = fmt("log10(SER)/dB slope over [25,40] dB: pair code %.4f (need -0.2 ± 0.01), "
                   "single branch %.4f (need -0.1 ± 0.01)",
                   s_pair, s_single);
    return r;
}

// --- criterion 9: equal-rate SNR gains from the analytic curves -------------

double crossing_db(const std::function<double(double)>& ser_of_db, double target, double lo,
                   double hi) {
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (ser_of_db(mid) > target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

Outcome criterion9() {
    const double x_bpsk = crossing_db(
        [](double db) { return ser_exact_rayleigh(db_to_linear(db), 2); }, 1e-3, 5.0, 45.0);
    const double x_pair_qpsk = crossing_db(
        [](double db) { return ser_exact_dual(db_to_linear(db) / 2.0, 4); }, 1e-3, 0.0, 40.0);
    const double gain_a = x_bpsk - x_pair_qpsk;

    const double x_qpsk = crossing_db(
        [](double db) { return ser_exact_rayleigh(db_to_linear(db), 4); }, 1e-4, 20.0, 60.0);
    const double x_pair_16 = crossing_db(
        [](double db) { return ser_exact_dual(db_to_linear(db) / 2.0, 16); }, 1e-4, 10.0, 55.0);
    const double gain_b = x_qpsk - x_pair_16;

    const bool pass_a = gain_a >= 3.5 && gain_a <= 6.5;
    const bool pass_b = gain_b > 15.0;
    Outcome r;
    r.pass = pass_a && pass_b;
    r.detail = fmt("pair-QPSK vs single-BPSK at SER 1e-3: %.2f dB (need 5 ± 1.5) -> %s; "
                   "pair-16QAM vs single-QPSK at SER 1e-4: %.2f dB (need > 15) -> %s",
                   gain_a, pass_a ? "ok" : "MISS", gain_b, pass_b ? "ok" : "MISS");
    if (!pass_b)
        r.detail += "; the >15 dB target is structurally incompatible with the ~5 dB gain of "
                    "the first pair: both curve pairs shift together under any common power/axis "
                    "normalization, leaving ~8 dB";
    return r;
}

// --- criterion 10: oracle identities ----------------------------------------

Outcome criterion10() {
    bool bpsk_ok = true;
    for (double db = -5.0; db <= 50.0; db += 1.0) {
        const double g = db_to_linear(db);
        const long double gl = g;
        const double textbook =
            static_cast<double>(0.5L * (1.0L - std::sqrt(gl / (1.0L + gl))));
        if (std::abs(ser_ideal(g, ser_params_for(2)) - textbook) > 1e-12 * textbook)
            bpsk_ok = false;
    }
    bool integral_ok = true;
    double worst_rel = 0.0;
    for (double scale : {0.1, 1.0, 10.0, 100.0, 1000.0, 10000.0}) {
        const auto p = ser_params_for(2);
        const double oracle = testutil::dual_branch_erfc_average_oracle(scale, p.a, p.b);
        const double rel = std::abs(ser_iqsc(scale, p) - oracle) / oracle;
        worst_rel = std::max(worst_rel, rel);
        integral_ok = integral_ok && rel <= 1e-8;
    }
    bool zf_ok = true;
    RandomStream rng(4711);
    for (int i = 0; i < 1000; ++i) {
        const IqiParams q = mixer_coefficients(0.6 + rng.uniform01(), rng.gaussian() * 0.3);
        const cplx x{rng.gaussian(), rng.gaussian()};
        const cplx y{rng.gaussian(), rng.gaussian()};
        const auto [mk, mm] = apply_rx_iqi(q, x, y);
        const auto [rk, rm] = zf_compensate(mk, mm, q);
        if (std::abs(rk - x) > 1e-10 || std::abs(rm - y) > 1e-10)
            zf_ok = false;
    }
    Outcome r;
    r.pass = bpsk_ok && integral_ok && zf_ok;
    r.detail = fmt("textbook Rayleigh-BPSK identity to 1e-12: %s; dual-branch closed form vs "
                   "quadrature oracle to 1e-8 over scale [0.1, 1e4]: %s (worst %.1e); "
                   "mixer-inversion round trip to 1e-10: %s",
                   bpsk_ok ? "ok" : "MISS", integral_ok ? "ok" : "MISS", worst_rel,
                   zf_ok ? "ok" : "MISS");
    return r;
}

// --- criterion 11: determinism ----------------------------------------------

Outcome criterion11() {
    SweepConfig cfg;
    cfg.schemes = {SchemeId::Ideal, SchemeId::Iqsc, SchemeId::RcMrc};
    cfg.modulation = 4;
    cfg.irr_db = {20.0, 35.0};
    cfg.snr_db = {0.0, 8.0, 16.0};
    cfg.metric = MetricSelection::both;
    cfg.seed = 0xfeedface;
    cfg.stopping = {200, 400'000};
    const std::string w1 = sweep_csv(cfg, 1);
    const std::string w4 = sweep_csv(cfg, 4);
    const std::string w9 = sweep_csv(cfg, 9);
    const std::string again = sweep_csv(cfg, 1);
    Outcome r;
    r.pass = w1 == w4 && w1 == w9 && w1 == again;
    r.detail = fmt("sweep CSV (%zu bytes): workers 1/4/9 and a rerun are %s",
                   w1.size(), r.pass ? "byte-identical" : "NOT identical");
    return r;
}

} // namespace

int main(int argc, char** argv) {
    using Fn = Outcome (*)();
    const std::vector<std::pair<int, Fn>> criteria = {
        {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4},
        {5, criterion5}, {6, criterion6}, {7, criterion7}, {8, criterion8},
        {9, criterion9}, {10, criterion10}, {11, criterion11}};

    int only = 0;
    if (argc > 1)
        only = std::atoi(argv[1]);

    int failures = 0;
    for (const auto& [num, fn] : criteria) {
        if (only != 0 && num != only)
            continue;
        const Outcome o = fn();
        std::printf("%s criterion-%d: %s\n", o.pass ? "PASS" : "FAIL", num, o.detail.c_str());
        std::fflush(stdout);
        failures += o.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
