// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>

namespace iqmirror {

using cplx = std::complex<double>;

/// Conditional-SER constants of the single-erfc family,
/// P(e|γ) = A·erfc(√(Bγ)). BPSK: A=0.5, B=1 (exact). QPSK: A=1, B=0.5
/// (nearest-neighbour form; the exact symbol-error average is available via
/// ser_exact_*).
struct ModulationSerParams {
    double a;
    double b;
};
ModulationSerParams ser_params_for(int order);

// ---- Instantaneous SINR/SNR -------------------------------------------------

/// Uncompensated RX IQI: gid_k / (gid_mk/irr + 1 + 1/irr), with gid_* the
/// per-subcarrier ideal SNRs.
double sinr_iqi(double gid_k, double gid_mk, double irr) noexcept;

/// Two-slot mirror-pair code at equal total transmit power: (gid_k + gid_mk)/2.
double snr_iqsc(double gid_k, double gid_mk) noexcept;

/// Repetition coding with MRC under RX IQI, at per-copy symbol SNR es_n0.
/// S = |K1|²G²·Es, I = 4|K2|²|h_k|²|h_mk|²·Es, N = (|K1|²+|K2|²)G·N0 with
/// G = |h_k|²+|h_mk|². As N0 → 0 this approaches
/// (|h_k|²/|h_mk|² + |h_mk|²/|h_k|² + 2)·irr/4.
double sinr_rc(cplx h_k, cplx h_mk, double irr, double es_n0) noexcept;

// ---- Outage probability -----------------------------------------------------

/// Rayleigh single branch: 1 − exp(−γth/gbar), γth = 2^R − 1.
double outage_ideal(double gbar, double rate);

/// Uncompensated RX IQI: 1 − exp(−(γth/gbar)(1+1/irr)) / (1 + γth/irr).
/// Reduces to outage_ideal as irr → ∞; floors at 1 − 1/(1+γth/irr).
double outage_iqi(double gbar, double rate, double irr);

/// Dual-branch chi-square with scale parameter `scale`:
/// 1 − (1 + γ̃th/scale)·exp(−γ̃th/scale), γ̃th = 2^(2R) − 1.
/// The published curves identify scale = gbar_id; the equal-power simulation
/// corresponds to scale = gbar_id/2.
double outage_iqsc(double scale, double rate);

// ---- Symbol error rate ------------------------------------------------------

/// Single-erfc conditional averaged over the Rayleigh branch:
/// A / (1 + B·gbar + √(B·gbar + (B·gbar)²)).
double ser_ideal(double gbar, ModulationSerParams p);

/// Single-erfc conditional averaged over the dual-branch chi-square of scale
/// `scale`: (A/2)(1−μ)²(2+μ) with μ = √(B·scale/(1+B·scale)).
double ser_iqsc(double scale, ModulationSerParams p);

/// Exact conditional SER of square M-QAM at SNR γ (nearest-point detection,
/// unit-Es grid): 1 − (1 − p)², p = (1 − 1/√M)·erfc(√(3γ/(2(M−1)))).
double ser_qam_conditional(double gamma, int order);

/// Exact conditional SER for any supported order (BPSK exact erfc form,
/// square QAM via ser_qam_conditional; order 4 is QPSK).
double ser_conditional(double gamma, int order);

/// Exact conditional SER averaged over the Rayleigh branch (adaptive
/// quadrature, relative tolerance 1e−9). Equals ser_ideal for BPSK.
double ser_exact_rayleigh(double gbar, int order);

/// Exact conditional SER averaged over the dual-branch chi-square of scale
/// `scale`. Equals ser_iqsc for BPSK.
double ser_exact_dual(double scale, int order);

/// Square-QAM SER under uncompensated RX IQI. The third term of the
/// per-symbol expression uses coefficient 4(√M−1)²/(πM), which makes the
/// zero-distortion limit exactly 0; `uncorrected` keeps the published
/// 4(M−1)²/(πM) for auditing. Result is clipped to [0, 1].
enum class QamSerCoefficient { corrected, uncorrected };
double ser_iqi_qam(double es_n0, int order, double irr,
                   QamSerCoefficient coef = QamSerCoefficient::corrected);

} // namespace iqmirror
