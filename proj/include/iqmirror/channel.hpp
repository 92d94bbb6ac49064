// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "iqmirror/rng.hpp"

namespace iqmirror {

/// Rayleigh block-fading gains for one mirror subcarrier pair. Drawn i.i.d.
/// CN(0,1) per coding block, constant within the block, independent across
/// blocks (mirror correlation is zero by model assumption).
struct MirrorPairChannel {
    cplx h_k;
    cplx h_mk;
};

struct NoiseModel {
    double n0 = 0.0; // noise PSD per subcarrier per slot, >= 0
};

inline MirrorPairChannel sample_block_channel(RandomStream& rng) {
    MirrorPairChannel ch;
    ch.h_k = rng.circular_gaussian(1.0);
    ch.h_mk = rng.circular_gaussian(1.0);
    return ch;
}

/// x + n with n ~ CN(0, n0).
inline cplx add_awgn(RandomStream& rng, cplx x, double n0) {
    if (n0 < 0.0)
        throw std::invalid_argument("add_awgn: negative noise density");
    if (n0 == 0.0)
        return x;
    return x + rng.circular_gaussian(n0);
}

/// SNR is configured as Es/N0 with Es = 1, so N0 = 10^(−snr_db/10).
inline double noise_density_for_snr_db(double snr_db) noexcept {
    return std::pow(10.0, -snr_db / 10.0);
}

} // namespace iqmirror
