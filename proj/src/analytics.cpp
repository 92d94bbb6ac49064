// SPDX-License-Identifier: Apache-2.0
#include "iqmirror/analytics.hpp"

#include "iqmirror/constellation.hpp"
#include "iqmirror/quadrature.hpp"
#include "iqmirror/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace iqmirror {

ModulationSerParams ser_params_for(int order) {
    switch (order) {
    case 2: return {0.5, 1.0};
    case 4: return {1.0, 0.5};
    default:
        throw std::invalid_argument("ser_params_for: single-erfc constants exist for M=2,4 only");
    }
}

double sinr_iqi(double gid_k, double gid_mk, double irr) noexcept {
    return gid_k / (gid_mk / irr + 1.0 + 1.0 / irr);
}

double snr_iqsc(double gid_k, double gid_mk) noexcept {
    return 0.5 * (gid_k + gid_mk);
}

double sinr_rc(cplx h_k, cplx h_mk, double irr, double es_n0) noexcept {
    const double gk = std::norm(h_k);
    const double gm = std::norm(h_mk);
    const double g = gk + gm;
    if (std::isinf(irr))
        return g * es_n0; // plain MRC, no image interference
    // S/(I+N), everything divided by |K2|²·Es: the IRR carries the coefficient
    // ratio and (irr+1)·G/es_n0 the composite-noise term.
    const double signal = irr * g * g;
    const double interference = 4.0 * gk * gm;
    const double noise = (irr + 1.0) * g / es_n0;
    return signal / (interference + noise);
}

namespace {

/// 1 − (1+x)e^(−x), series-protected against cancellation for small x.
double one_minus_1px_emx(double x) {
    if (x < 0.01) {
        // Σ_{n≥2} (−1)^n x^n (n−1)/n!
        double term = x * x / 2.0, sum = term;
        double xp = x * x;
        double fact = 2.0;
        for (int n = 3; n <= 9; ++n) {
            xp *= x;
            fact *= n;
            term = xp * (n - 1) / fact;
            sum += (n % 2 == 0) ? term : -term;
        }
        return sum;
    }
    return 1.0 - (1.0 + x) * std::exp(-x);
}

} // namespace

double outage_ideal(double gbar, double rate) {
    if (!(gbar > 0.0) || !(rate > 0.0))
        throw std::invalid_argument("outage_ideal: gbar and rate must be > 0");
    const double gth = std::exp2(rate) - 1.0;
    return -std::expm1(-gth / gbar);
}

double outage_iqi(double gbar, double rate, double irr) {
    if (!(gbar > 0.0) || !(rate > 0.0) || !(irr > 0.0))
        throw std::invalid_argument("outage_iqi: gbar, rate and irr must be > 0");
    const double gth = std::exp2(rate) - 1.0;
    return 1.0 - std::exp(-(gth / gbar) * (1.0 + 1.0 / irr)) / (1.0 + gth / irr);
}

double outage_iqsc(double scale, double rate) {
    if (!(scale > 0.0) || !(rate > 0.0))
        throw std::invalid_argument("outage_iqsc: scale and rate must be > 0");
    const double gth = std::exp2(2.0 * rate) - 1.0;
    return one_minus_1px_emx(gth / scale);
}

double ser_ideal(double gbar, ModulationSerParams p) {
    if (!(gbar > 0.0))
        throw std::invalid_argument("ser_ideal: gbar must be > 0");
    const double t = p.b * gbar;
    return p.a / (1.0 + t + std::sqrt(t + t * t));
}

double ser_iqsc(double scale, ModulationSerParams p) {
    if (!(scale > 0.0))
        throw std::invalid_argument("ser_iqsc: scale must be > 0");
    const double t = p.b * scale;
    // 1 − μ computed in its cancellation-free form
    const double one_minus_mu = 1.0 / (1.0 + t + std::sqrt(t * (1.0 + t)));
    const double mu = 1.0 - one_minus_mu;
    return 0.5 * p.a * one_minus_mu * one_minus_mu * (2.0 + mu);
}

double ser_qam_conditional(double gamma, int order) {
    if (order != 4 && order != 16 && order != 64)
        throw std::invalid_argument("ser_qam_conditional: order must be square QAM (4, 16, 64)");
    if (gamma < 0.0)
        throw std::invalid_argument("ser_qam_conditional: gamma must be >= 0");
    const double c = 1.0 - 1.0 / std::sqrt(static_cast<double>(order));
    const double p = c * erfc(std::sqrt(1.5 * gamma / (order - 1)));
    return p * (2.0 - p);
}

double ser_conditional(double gamma, int order) {
    if (order == 2)
        return 0.5 * erfc(std::sqrt(gamma));
    return ser_qam_conditional(gamma, order);
}

namespace {

double decay_rate(int order) {
    return order == 2 ? 1.0 : 1.5 / (order - 1);
}

} // namespace

double ser_exact_rayleigh(double gbar, int order) {
    if (!(gbar > 0.0))
        throw std::invalid_argument("ser_exact_rayleigh: gbar must be > 0");
    // substitution γ = u²: both the erfc decay and the exponential become
    // Gaussian in u, keeping the integrand well scaled at any SNR
    const double u_max = std::sqrt(130.0 / (decay_rate(order) + 1.0 / gbar));
    const auto f = [&](double u) {
        return ser_conditional(u * u, order) * (2.0 * u / gbar) * std::exp(-u * u / gbar);
    };
    return integrate_adaptive(f, 0.0, u_max, 1e-9);
}

double ser_exact_dual(double scale, int order) {
    if (!(scale > 0.0))
        throw std::invalid_argument("ser_exact_dual: scale must be > 0");
    const double u_max = std::sqrt(130.0 / (decay_rate(order) + 1.0 / scale));
    const double s2 = scale * scale;
    const auto f = [&](double u) {
        return ser_conditional(u * u, order) * (2.0 * u * u * u / s2) * std::exp(-u * u / scale);
    };
    return integrate_adaptive(f, 0.0, u_max, 1e-9);
}

double ser_iqi_qam(double es_n0, int order, double irr, QamSerCoefficient coef) {
    if (order != 4 && order != 16 && order != 64)
        throw std::invalid_argument("ser_iqi_qam: order must be square QAM (4, 16, 64)");
    if (!(irr > 0.0))
        throw std::invalid_argument("ser_iqi_qam: irr must be > 0");
    const double n0 = std::isinf(es_n0) ? 0.0 : 1.0 / es_n0;
    const double m = static_cast<double>(order);
    const double sqm = std::sqrt(m);
    const double third_coef = (coef == QamSerCoefficient::corrected)
                                  ? 4.0 * (sqm - 1.0) * (sqm - 1.0) / (std::numbers::pi * m)
                                  : 4.0 * (m - 1.0) * (m - 1.0) / (std::numbers::pi * m);
    const auto& alphabet = Constellation::of_order(order).points();

    double total = 0.0;
    for (const auto& sym : alphabet) {
        const double phi2 =
            2.0 * (m - 1.0) / (3.0 * irr) * (std::norm(sym) + (irr + 1.0) * n0);
        const double root = std::sqrt(1.0 + phi2);
        total += (m - 1.0) / m - 2.0 * (sqm - 1.0) / (m * root) -
                 third_coef / root * std::atan(1.0 / (1.0 + phi2));
    }
    return std::clamp(total / m, 0.0, 1.0);
}

} // namespace iqmirror
