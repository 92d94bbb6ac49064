// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>

namespace iqmirror {

using cplx = std::complex<double>;

/// 64-bit avalanche mix (splitmix64 finalizer). Used to derive seeds.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Accumulates heterogeneous key material into one 64-bit seed.
struct SeedChain {
    std::uint64_t h = 0x6a09e667f3bcc909ULL;
    SeedChain& absorb(std::uint64_t x) noexcept {
        h = mix64(h ^ x);
        return *this;
    }
    SeedChain& absorb(double x) noexcept;
    std::uint64_t value() const noexcept { return h; }
};

/// xoshiro256++ with splitmix64 state initialization.
class Xoshiro256pp {
public:
    explicit Xoshiro256pp(std::uint64_t seed) noexcept {
        // splitmix64 stream seeds the state; guaranteed nonzero
        std::uint64_t x = seed;
        for (auto& w : s_) {
            x += 0x9e3779b97f4a7c15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
            w = z ^ (z >> 31);
        }
    }

    std::uint64_t next() noexcept {
        const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
        const std::uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    /// Uniform in (0, 1]; never returns 0 so log() is safe.
    double uniform01() noexcept {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

private:
    static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
        return (x << k) | (x >> (64 - k));
    }
    std::uint64_t s_[4];
};

/// Random stream owned by exactly one trial/worker. Gaussian variates via
/// Box–Muller with one cached value.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) noexcept : gen_(seed) {}

    double uniform01() noexcept { return gen_.uniform01(); }

    std::uint64_t next_u64() noexcept { return gen_.next(); }

    /// Standard normal N(0, 1).
    double gaussian() noexcept;

    /// Circularly symmetric complex Gaussian CN(0, variance).
    cplx circular_gaussian(double variance) {
        if (variance < 0.0)
            throw std::invalid_argument("circular_gaussian: negative variance");
        if (variance == 0.0)
            return {0.0, 0.0};
        const double s = std::sqrt(variance * 0.5);
        const double re = gaussian();
        const double im = gaussian();
        return {s * re, s * im};
    }

private:
    Xoshiro256pp gen_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

inline cplx sample_circular_gaussian(RandomStream& rng, double variance) {
    return rng.circular_gaussian(variance);
}

/// Counter-based per-trial stream: a pure function of (point_seed, trial),
/// so results do not depend on worker count or scheduling.
inline RandomStream trial_stream(std::uint64_t point_seed, std::uint64_t trial) noexcept {
    return RandomStream(mix64(point_seed ^ mix64(trial + 0x517cc1b727220a95ULL)));
}

} // namespace iqmirror
