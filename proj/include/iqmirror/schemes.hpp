// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "iqmirror/channel.hpp"
#include "iqmirror/constellation.hpp"
#include "iqmirror/iqi.hpp"
#include "iqmirror/rng.hpp"

#include <optional>
#include <string>
#include <utility>

namespace iqmirror {

/// Transceiver chains. Iqsc, AIqsc and RcMrc are rate-1/2 (one information
/// symbol per subcarrier per two channel uses); the others are rate-1.
enum class SchemeId { Ideal, IqiUncompensated, ZfCompensated, Iqsc, AIqsc, RcMrc };

const char* scheme_name(SchemeId s) noexcept;
std::optional<SchemeId> scheme_from_name(const std::string& name) noexcept;
bool is_half_rate(SchemeId s) noexcept;

/// Outage SNR threshold: 2^R − 1 for rate-1 chains, 2^(2R) − 1 for the
/// rate-1/2 chains that spend two channel uses per symbol.
double outage_threshold(SchemeId s, double rate) noexcept;

/// Channel-related combiner parameters for the two-slot mirror-pair code:
/// a1 = k1·h(k), a2 = k2·h*(−k), a3 = k1·h(−k), a4 = k2·h*(k).
struct IqscChannelParams {
    cplx a1, a2, a3, a4;

    static IqscChannelParams from(const IqiParams& iqi, const MirrorPairChannel& ch) noexcept {
        return {iqi.k1 * ch.h_k, iqi.k2 * std::conj(ch.h_mk),
                iqi.k1 * ch.h_mk, iqi.k2 * std::conj(ch.h_k)};
    }
    /// Σ|aᵢ|² = (|k1|²+|k2|²)(|h(k)|²+|h(−k)|²), the combining gain.
    double gain() const noexcept {
        return std::norm(a1) + std::norm(a2) + std::norm(a3) + std::norm(a4);
    }
};

/// Single-slot variant parameters: alpha = a1 + a2, beta = a3 + a4.
struct AIqscChannelParams {
    cplx alpha, beta;

    static AIqscChannelParams from(const IqiParams& iqi, const MirrorPairChannel& ch) noexcept {
        const auto p = IqscChannelParams::from(iqi, ch);
        return {p.a1 + p.a2, p.a3 + p.a4};
    }
    double gain() const noexcept { return std::norm(alpha) + std::norm(beta); }
};

/// Two-slot mirror-pair encoding. Slot 1 carries (conj(s_mk) on −k, s_k on k),
/// slot 2 carries (s_k on −k, −conj(s_mk) on k). Every entry is scaled by
/// √es_per_use; es_per_use = Es/2 keeps the per-information-symbol energy
/// equal to the rate-1 chains.
struct IqscBlock {
    cplx slot1_k, slot1_mk;
    cplx slot2_k, slot2_mk;
};
IqscBlock iqsc_encode(cplx s_k, cplx s_mk, double es_per_use) noexcept;

/// Combines the four received signals (x1, x2 on k in slots 1, 2; x3, x4 on
/// −k in slots 1, 2). Noise-free outputs equal Σ|aᵢ|²·s(k) and Σ|aᵢ|²·s(−k):
/// the mirror interference cancels identically.
std::pair<cplx, cplx> iqsc_combine(cplx x1, cplx x2, cplx x3, cplx x4,
                                   const IqscChannelParams& p) noexcept;

/// Single-slot encoding: conj(s) on −k, s on k, each scaled by √es_per_use.
/// Returned as (entry on k, entry on −k).
std::pair<cplx, cplx> aiqsc_encode(cplx s_k, double es_per_use) noexcept;

/// y = conj(alpha)·x(k) + beta·conj(x(−k)); noise-free equals
/// (|alpha|²+|beta|²)·s.
cplx aiqsc_combine(cplx x_k, cplx x_mk, const AIqscChannelParams& p) noexcept;

/// MRC combining of the repetition-coded pair. Under IQI the residual
/// self-interference 2·k2·h*(k)·h*(−k)·conj(s) remains in the output.
cplx rc_combine(cplx x_k, cplx x_mk, cplx h_k, cplx h_mk) noexcept;

/// Inverts the 2x2 mixing [[k1, k2], [k2*, k1*]] acting on
/// (r_id(k), conj(r_id(−k))). Requires |k1| != |k2|.
std::pair<cplx, cplx> zf_compensate(cplx r_k, cplx r_mk, const IqiParams& p);

struct TrialOutcome {
    bool symbol_error = false;
    /// Instantaneous post-combining SINR/SNR of the scored subcarrier,
    /// computed from the drawn channel via the scheme's analytic expression.
    double post_combining_snr = 0.0;
};

/// One Monte Carlo block: draws channel and data, encodes, applies RX IQI
/// (skipped when the parameters are ideal), adds per-slot AWGN, combines or
/// equalizes, detects. Scores the subcarrier-k symbol; the mirror symbol is
/// transmitted as interference but not counted, so scored trials stay
/// independent across blocks.
TrialOutcome run_block(SchemeId scheme, RandomStream& rng, const IqiParams& iqi,
                       double snr_db, const Constellation& constellation);

/// Instantaneous SINR/SNR from a channel draw alone (outage path).
double instantaneous_snr(SchemeId scheme, const MirrorPairChannel& ch, const IqiParams& iqi,
                         double snr_db) noexcept;

} // namespace iqmirror
