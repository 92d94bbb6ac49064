// SPDX-License-Identifier: Apache-2.0
#include "iqmirror/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace iqmirror {

namespace {

// 15-point Kronrod nodes/weights with embedded 7-point Gauss rule, on [-1, 1].
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Segment {
    double a, b, value, error;
};

Segment evaluate(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    const double fc = f(c);
    double result_g = fc * kWg[3];
    double result_k = fc * kWgk[7];
    for (int j = 0; j < 7; ++j) {
        const double x = h * kXgk[j];
        const double fsum = f(c - x) + f(c + x);
        result_k += kWgk[j] * fsum;
        if (j % 2 == 1)
            result_g += kWg[j / 2] * fsum;
    }
    result_g *= h;
    result_k *= h;
    return {a, b, result_k, std::abs(result_k - result_g)};
}

} // namespace

double integrate_adaptive(const std::function<double(double)>& f, double a, double b,
                          double rel_tol, double abs_tol) {
    if (!(b > a))
        return 0.0;
    std::vector<Segment> segs;
    segs.push_back(evaluate(f, a, b));

    for (int iter = 0; iter < 2000; ++iter) {
        double total = 0.0, err = 0.0;
        std::size_t worst = 0;
        double worst_err = -1.0;
        for (std::size_t i = 0; i < segs.size(); ++i) {
            total += segs[i].value;
            err += segs[i].error;
            if (segs[i].error > worst_err) {
                worst_err = segs[i].error;
                worst = i;
            }
        }
        if (err <= rel_tol * std::abs(total) || err <= abs_tol)
            return total;
        const Segment s = segs[worst];
        const double mid = 0.5 * (s.a + s.b);
        if (mid <= s.a || mid >= s.b)
            return total; // interval exhausted at double precision
        segs[worst] = evaluate(f, s.a, mid);
        segs.push_back(evaluate(f, mid, s.b));
    }
    double total = 0.0;
    for (const auto& s : segs)
        total += s.value;
    return total;
}

} // namespace iqmirror
