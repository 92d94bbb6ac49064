// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <functional>

namespace iqmirror {

/// Adaptive Gauss–Kronrod 15(7) on [a, b]. Splits until the local error
/// estimate meets rel_tol against the running total (or abs_tol).
double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol = 1e-10, double abs_tol = 0.0);

} // namespace iqmirror
