// SPDX-License-Identifier: Apache-2.0
#include "iqmirror/iqi.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace iqmirror {

IqiParams mixer_coefficients(double epsilon, double phase_rad) {
    if (!(epsilon > 0.0))
        throw std::invalid_argument("mixer_coefficients: epsilon must be > 0");
    if (!(std::abs(phase_rad) < std::numbers::pi / 2))
        throw std::invalid_argument("mixer_coefficients: |phase| must be < pi/2");
    IqiParams p;
    p.epsilon = epsilon;
    p.phase = phase_rad;
    const cplx em{std::cos(phase_rad), -std::sin(phase_rad)};
    p.k1 = 0.5 * (1.0 + epsilon * em);
    p.k2 = 0.5 * (1.0 - epsilon * std::conj(em));
    return p;
}

double irr_linear(const IqiParams& p) noexcept {
    const double k2sq = std::norm(p.k2);
    if (k2sq == 0.0)
        return std::numeric_limits<double>::infinity();
    return std::norm(p.k1) / k2sq;
}

IqiParams params_for_irr(double irr_db) {
    if (std::isinf(irr_db) && irr_db > 0.0)
        return mixer_coefficients(1.0, 0.0);
    if (!(irr_db > 0.0))
        throw std::invalid_argument("params_for_irr: irr_db must be > 0");
    const double q = std::pow(10.0, -irr_db / 20.0);
    return mixer_coefficients((1.0 - q) / (1.0 + q), 0.0);
}

std::pair<cplx, cplx> apply_rx_iqi(const IqiParams& p, cplx r_id_k, cplx r_id_mk) noexcept {
    return {p.k1 * r_id_k + p.k2 * std::conj(r_id_mk),
            p.k1 * r_id_mk + p.k2 * std::conj(r_id_k)};
}

} // namespace iqmirror
