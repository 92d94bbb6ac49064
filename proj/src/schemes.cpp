// SPDX-License-Identifier: Apache-2.0
#include "iqmirror/schemes.hpp"

#include "iqmirror/analytics.hpp"
#include "iqmirror/special.hpp"

#include <cmath>
#include <stdexcept>

namespace iqmirror {

const char* scheme_name(SchemeId s) noexcept {
    switch (s) {
    case SchemeId::Ideal: return "Ideal";
    case SchemeId::IqiUncompensated: return "IqiUncompensated";
    case SchemeId::ZfCompensated: return "ZfCompensated";
    case SchemeId::Iqsc: return "Iqsc";
    case SchemeId::AIqsc: return "AIqsc";
    case SchemeId::RcMrc: return "RcMrc";
    }
    return "?";
}

std::optional<SchemeId> scheme_from_name(const std::string& name) noexcept {
    for (SchemeId s : {SchemeId::Ideal, SchemeId::IqiUncompensated, SchemeId::ZfCompensated,
                       SchemeId::Iqsc, SchemeId::AIqsc, SchemeId::RcMrc})
        if (name == scheme_name(s))
            return s;
    return std::nullopt;
}

bool is_half_rate(SchemeId s) noexcept {
    return s == SchemeId::Iqsc || s == SchemeId::AIqsc || s == SchemeId::RcMrc;
}

double outage_threshold(SchemeId s, double rate) noexcept {
    return std::exp2(is_half_rate(s) ? 2.0 * rate : rate) - 1.0;
}

IqscBlock iqsc_encode(cplx s_k, cplx s_mk, double es_per_use) noexcept {
    const double amp = std::sqrt(es_per_use);
    IqscBlock blk;
    blk.slot1_k = amp * s_k;
    blk.slot1_mk = amp * std::conj(s_mk);
    blk.slot2_k = -amp * std::conj(s_mk);
    blk.slot2_mk = amp * s_k;
    return blk;
}

std::pair<cplx, cplx> iqsc_combine(cplx x1, cplx x2, cplx x3, cplx x4,
                                   const IqscChannelParams& p) noexcept {
    const cplx y_k = std::conj(p.a1) * x1 + p.a2 * std::conj(x2) +
                     std::conj(p.a3) * x4 + p.a4 * std::conj(x3);
    const cplx y_mk = -p.a1 * std::conj(x2) + std::conj(p.a2) * x1 +
                      p.a3 * std::conj(x3) - std::conj(p.a4) * x4;
    return {y_k, y_mk};
}

std::pair<cplx, cplx> aiqsc_encode(cplx s_k, double es_per_use) noexcept {
    const double amp = std::sqrt(es_per_use);
    return {amp * s_k, amp * std::conj(s_k)};
}

cplx aiqsc_combine(cplx x_k, cplx x_mk, const AIqscChannelParams& p) noexcept {
    return std::conj(p.alpha) * x_k + p.beta * std::conj(x_mk);
}

cplx rc_combine(cplx x_k, cplx x_mk, cplx h_k, cplx h_mk) noexcept {
    return std::conj(h_k) * x_k + std::conj(h_mk) * x_mk;
}

std::pair<cplx, cplx> zf_compensate(cplx r_k, cplx r_mk, const IqiParams& p) {
    const double det = std::norm(p.k1) - std::norm(p.k2);
    if (det == 0.0)
        throw std::domain_error("zf_compensate: singular mixing (|k1| == |k2|)");
    // invert [[k1, k2], [k2*, k1*]] acting on (r_id(k), conj(r_id(-k)))
    const cplx rid_k = (std::conj(p.k1) * r_k - p.k2 * std::conj(r_mk)) / det;
    const cplx rid_mk_conj = (p.k1 * std::conj(r_mk) - std::conj(p.k2) * r_k) / det;
    return {rid_k, std::conj(rid_mk_conj)};
}

namespace {

/// Exact post-combining SNR of the single-slot variant. The composite noise
/// on the pair is pseudo-correlated (E[w(k)w(-k)] = 2·k1·k2·N0), which adds
/// a 4·Re{α*β*k1k2} term to the combined noise variance.
double aiqsc_instantaneous_snr(const AIqscChannelParams& p, const IqiParams& iqi,
                               double es_per_use, double n0) noexcept {
    const double g = p.gain();
    const double var = (g * iqi.coef_power() +
                        4.0 * (std::conj(p.alpha) * std::conj(p.beta) * iqi.k1 * iqi.k2).real()) * n0;
    return g * g * es_per_use / var;
}

} // namespace

double instantaneous_snr(SchemeId scheme, const MirrorPairChannel& ch, const IqiParams& iqi,
                         double snr_db) noexcept {
    const double gbar = db_to_linear(snr_db);
    const double gid_k = std::norm(ch.h_k) * gbar;
    const double gid_mk = std::norm(ch.h_mk) * gbar;
    switch (scheme) {
    case SchemeId::Ideal:
    case SchemeId::ZfCompensated:
        return gid_k;
    case SchemeId::IqiUncompensated:
        return sinr_iqi(gid_k, gid_mk, irr_linear(iqi));
    case SchemeId::Iqsc:
        return snr_iqsc(gid_k, gid_mk);
    case SchemeId::AIqsc:
        return aiqsc_instantaneous_snr(AIqscChannelParams::from(iqi, ch), iqi, 0.5,
                                       1.0 / gbar);
    case SchemeId::RcMrc:
        return sinr_rc(ch.h_k, ch.h_mk, irr_linear(iqi), 0.5 * gbar);
    }
    return 0.0;
}

TrialOutcome run_block(SchemeId scheme, RandomStream& rng, const IqiParams& iqi,
                       double snr_db, const Constellation& constellation) {
    const double n0 = noise_density_for_snr_db(snr_db);
    const int m = constellation.order();

    // fixed draw order (channel, both symbol indices, then noise) so schemes
    // sharing a stream also share channel and data
    const MirrorPairChannel ch = sample_block_channel(rng);
    const int idx_k = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(m));
    const int idx_mk = static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(m));
    const cplx s_k = constellation.modulate(idx_k);
    const cplx s_mk = constellation.modulate(idx_mk);

    TrialOutcome out;
    out.post_combining_snr = instantaneous_snr(scheme, ch, iqi, snr_db);

    cplx decision_in;
    switch (scheme) {
    case SchemeId::Ideal: {
        const cplx r = add_awgn(rng, ch.h_k * s_k, n0);
        decision_in = r / ch.h_k;
        break;
    }
    case SchemeId::IqiUncompensated:
    case SchemeId::ZfCompensated: {
        const cplx rid_k = add_awgn(rng, ch.h_k * s_k, n0);
        const cplx rid_mk = add_awgn(rng, ch.h_mk * s_mk, n0);
        auto [r_k, r_mk] = apply_rx_iqi(iqi, rid_k, rid_mk);
        if (scheme == SchemeId::ZfCompensated) {
            auto [c_k, c_mk] = zf_compensate(r_k, r_mk, iqi);
            decision_in = c_k / ch.h_k;
        } else {
            // one-tap equalization against the known desired-signal
            // coefficient; the image term is treated as noise
            decision_in = r_k / (iqi.k1 * ch.h_k);
        }
        break;
    }
    case SchemeId::Iqsc: {
        const double es_use = 0.5;
        const IqscBlock blk = iqsc_encode(s_k, s_mk, es_use);
        const cplx r1k = add_awgn(rng, ch.h_k * blk.slot1_k, n0);
        const cplx r1m = add_awgn(rng, ch.h_mk * blk.slot1_mk, n0);
        const cplx r2k = add_awgn(rng, ch.h_k * blk.slot2_k, n0);
        const cplx r2m = add_awgn(rng, ch.h_mk * blk.slot2_mk, n0);
        auto [x1, x3] = apply_rx_iqi(iqi, r1k, r1m);
        auto [x2, x4] = apply_rx_iqi(iqi, r2k, r2m);
        const auto p = IqscChannelParams::from(iqi, ch);
        auto [y_k, y_mk] = iqsc_combine(x1, x2, x3, x4, p);
        decision_in = y_k / (p.gain() * std::sqrt(es_use));
        break;
    }
    case SchemeId::AIqsc: {
        const double es_use = 0.5;
        auto [t_k, t_mk] = aiqsc_encode(s_k, es_use);
        const cplx rid_k = add_awgn(rng, ch.h_k * t_k, n0);
        const cplx rid_mk = add_awgn(rng, ch.h_mk * t_mk, n0);
        auto [x_k, x_mk] = apply_rx_iqi(iqi, rid_k, rid_mk);
        const auto p = AIqscChannelParams::from(iqi, ch);
        decision_in = aiqsc_combine(x_k, x_mk, p) / (p.gain() * std::sqrt(es_use));
        break;
    }
    case SchemeId::RcMrc: {
        const double es_use = 0.5;
        const cplx t = std::sqrt(es_use) * s_k;
        const cplx rid_k = add_awgn(rng, ch.h_k * t, n0);
        const cplx rid_mk = add_awgn(rng, ch.h_mk * t, n0);
        auto [x_k, x_mk] = apply_rx_iqi(iqi, rid_k, rid_mk);
        const cplx y = rc_combine(x_k, x_mk, ch.h_k, ch.h_mk);
        const double g = std::norm(ch.h_k) + std::norm(ch.h_mk);
        decision_in = y / (iqi.k1 * g * std::sqrt(es_use));
        break;
    }
    }

    out.symbol_error = constellation.detect_nearest(decision_in) != idx_k;
    return out;
}

} // namespace iqmirror
