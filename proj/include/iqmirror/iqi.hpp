// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <utility>

namespace iqmirror {

using cplx = std::complex<double>;

/// Receive-side I/Q mixer imbalance. epsilon is the relative amplitude
/// mismatch (1 = perfect), phase the phase mismatch in radians. The mixing
/// coefficients satisfy k1 = 1 − conj(k2), and |k1|²/|k2|² is the image
/// rejection ratio. Immutable after construction; safe to share.
struct IqiParams {
    double epsilon = 1.0;
    double phase = 0.0;
    cplx k1{1.0, 0.0};
    cplx k2{0.0, 0.0};

    /// |k1|² + |k2|², the composite-noise power scaling; equals ½(1 + ε²).
    double coef_power() const noexcept { return std::norm(k1) + std::norm(k2); }
};

/// k1 = ½(1 + ε·e^(−jφ)), k2 = ½(1 − ε·e^(jφ)). Requires ε > 0, |φ| < π/2.
IqiParams mixer_coefficients(double epsilon, double phase_rad);

/// |k1|²/|k2|²; +inf for perfect matching (k2 = 0).
double irr_linear(const IqiParams& p) noexcept;

/// Parameters realizing a target image rejection ratio with φ = 0:
/// (1−ε)/(1+ε) = 10^(−irr_db/20). irr_db = +inf yields the ideal front end.
IqiParams params_for_irr(double irr_db);

/// Mirror-symmetric mixer action on one subcarrier pair:
/// r(k) = k1·r_id(k) + k2·conj(r_id(−k)) and vice versa.
std::pair<cplx, cplx> apply_rx_iqi(const IqiParams& p, cplx r_id_k, cplx r_id_mk) noexcept;

} // namespace iqmirror
