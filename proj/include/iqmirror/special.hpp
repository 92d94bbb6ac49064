// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>

namespace iqmirror {

/// Complementary error function, 2/√π ∫ₓ^∞ e^(−t²) dt.
/// libm's erfc is correctly rounded to a few ulp, far inside the 1e−10
/// relative budget needed by the SER closed forms near their floors.
inline double erfc(double x) noexcept { return std::erfc(x); }

/// Power dB → linear ratio.
inline double db_to_linear(double db) noexcept { return std::pow(10.0, db / 10.0); }

/// Linear power ratio → dB.
inline double linear_to_db(double lin) noexcept { return 10.0 * std::log10(lin); }

} // namespace iqmirror
