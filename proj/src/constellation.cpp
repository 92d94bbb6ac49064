// SPDX-License-Identifier: Apache-2.0
#include "iqmirror/constellation.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace iqmirror {

namespace {

// Gray label -> PAM level index (inverse of l ^ (l >> 1)).
int gray_decode(int g) noexcept {
    int l = g;
    for (int shift = 1; shift < 8; shift <<= 1)
        l ^= l >> shift;
    return l;
}

} // namespace

Constellation::Constellation(int m) {
    if (m == 2) {
        bits_ = 1;
        points_ = {cplx{1.0, 0.0}, cplx{-1.0, 0.0}};
        return;
    }
    if (m != 4 && m != 16 && m != 64)
        throw std::invalid_argument("Constellation: order must be 2, 4, 16 or 64");

    bits_ = static_cast<int>(std::lround(std::log2(m)));
    const int axis_bits = bits_ / 2;
    const int levels = 1 << axis_bits;

    // Per-axis Gray-coded PAM: levels {±1, ±3, ...}, average grid energy
    // 2*(L²−1)/3 per complex symbol.
    const double norm = std::sqrt(2.0 * (levels * levels - 1) / 3.0);
    points_.resize(static_cast<std::size_t>(m));
    for (int idx = 0; idx < m; ++idx) {
        const int gi = idx >> axis_bits;
        const int gq = idx & (levels - 1);
        const double re = (2 * gray_decode(gi) - (levels - 1)) / norm;
        const double im = (2 * gray_decode(gq) - (levels - 1)) / norm;
        points_[static_cast<std::size_t>(idx)] = {re, im};
    }
}

const Constellation& Constellation::of_order(int m) {
    static const Constellation bpsk(2);
    static const Constellation qpsk(4);
    static const Constellation qam16(16);
    static const Constellation qam64(64);
    switch (m) {
    case 2: return bpsk;
    case 4: return qpsk;
    case 16: return qam16;
    case 64: return qam64;
    default: throw std::invalid_argument("Constellation: order must be 2, 4, 16 or 64");
    }
}

cplx Constellation::modulate(int index) const {
    if (index < 0 || index >= order())
        throw std::invalid_argument("Constellation::modulate: index out of range");
    return points_[static_cast<std::size_t>(index)];
}

int Constellation::detect_nearest(cplx y) const noexcept {
    int best = 0;
    double best_d = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < points_.size(); ++i) {
        const double d = std::norm(y - points_[i]);
        if (d < best_d) {
            best_d = d;
            best = static_cast<int>(i);
        }
    }
    return best;
}

double Constellation::average_energy() const noexcept {
    double e = 0.0;
    for (const auto& p : points_)
        e += std::norm(p);
    return e / static_cast<double>(points_.size());
}

} // namespace iqmirror
