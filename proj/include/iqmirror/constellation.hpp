// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

namespace iqmirror {

using cplx = std::complex<double>;

/// Gray-mapped modulation alphabet normalized to unit average symbol energy.
///
/// Supported orders: 2 (BPSK), 4 (QPSK) and square QAM 16/64. The symbol
/// index doubles as the Gray label: nearest-neighbour grid points differ in
/// exactly one index bit.
class Constellation {
public:
    static const Constellation& of_order(int m);

    int order() const noexcept { return static_cast<int>(points_.size()); }
    int bits_per_symbol() const noexcept { return bits_; }
    const std::vector<cplx>& points() const noexcept { return points_; }

    /// Gray-mapped point for a symbol index in [0, M).
    cplx modulate(int index) const;

    /// Index of the nearest point; ties resolve to the lowest index.
    int detect_nearest(cplx y) const noexcept;

    double average_energy() const noexcept;

private:
    explicit Constellation(int m);
    std::vector<cplx> points_;
    int bits_ = 0;
};

} // namespace iqmirror
