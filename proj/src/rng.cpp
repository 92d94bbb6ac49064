// SPDX-License-Identifier: Apache-2.0
#include "iqmirror/rng.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace iqmirror {

SeedChain& SeedChain::absorb(double x) noexcept {
    // normalize -0.0 so equal grids hash equally
    if (x == 0.0)
        x = 0.0;
    return absorb(std::bit_cast<std::uint64_t>(x));
}

double RandomStream::gaussian() noexcept {
    if (has_cached_) {
        has_cached_ = false;
        return cached_;
    }
    const double u1 = gen_.uniform01();
    const double u2 = gen_.uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    cached_ = r * std::sin(a);
    has_cached_ = true;
    return r * std::cos(a);
}

} // namespace iqmirror
