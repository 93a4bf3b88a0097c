// SPDX-License-Identifier: Apache-2.0
//
// irsop — outage probability of IRS-assisted links in kappa-mu fading
// Globally adaptive Gauss-Kronrod (G7, K15) quadrature on finite intervals.

#pragma once

#include <cmath>
#include <queue>
#include <vector>

#include "irsop/specfun.hpp"

namespace irsop {

struct QuadratureControl {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_subdivisions = 2000;
    // Uniform pre-split of the interval; guards the error estimate against
    // features narrower than the initial rule spacing.
    int initial_segments = 8;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0))
            throw std::invalid_argument("QuadratureControl: tolerances must be positive");
        if (max_subdivisions < 1)
            throw std::invalid_argument("QuadratureControl: max_subdivisions must be >= 1");
        if (initial_segments < 1)
            throw std::invalid_argument("QuadratureControl: initial_segments must be >= 1");
    }
};

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;   // achieved error estimate
    int subdivisions = 1;
};

namespace detail {

// QUADPACK dqk15 nodes and weights.
inline constexpr double kKronrodX[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
};
inline constexpr double kKronrodW[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
};
inline constexpr double kGaussW[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
};

struct Segment {
    double a, b, value, error;
    bool operator<(const Segment& o) const { return error < o.error; }
};

template <class F>
Segment gk15(F&& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double hl = 0.5 * (b - a);
    double fv[15];
    fv[7] = f(mid);
    for (int i = 0; i < 7; ++i) {
        const double dx = hl * kKronrodX[i];
        fv[i] = f(mid + dx);
        fv[14 - i] = f(mid - dx);
    }
    double resk = kKronrodW[7] * fv[7];
    double resg = kGaussW[3] * fv[7];
    double resabs = std::fabs(resk);
    for (int i = 0; i < 7; ++i) {
        const double s = fv[i] + fv[14 - i];
        resk += kKronrodW[i] * s;
        resabs += kKronrodW[i] * (std::fabs(fv[i]) + std::fabs(fv[14 - i]));
        if (i % 2 == 1) resg += kGaussW[i / 2] * s;
    }
    const double reskh = 0.5 * resk;
    double resasc = kKronrodW[7] * std::fabs(fv[7] - reskh);
    for (int i = 0; i < 7; ++i)
        resasc += kKronrodW[i] *
                  (std::fabs(fv[i] - reskh) + std::fabs(fv[14 - i] - reskh));
    resasc *= hl;
    double err = std::fabs((resk - resg) * hl);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    const double round = 50.0 * kEps * resabs * hl;
    return {a, b, resk * hl, std::max(err, round)};
}

}  // namespace detail

/// Adaptive quadrature of f over [a, b]. Throws NumericError (reporting the
/// achieved error estimate) if the tolerance cannot be met within the
/// subdivision budget.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, const QuadratureControl& ctl = {}) {
    ctl.validate();
    if (a == b) return {0.0, 0.0, 0};
    std::priority_queue<detail::Segment> heap;
    const int init = std::min(ctl.initial_segments, ctl.max_subdivisions);
    double total = 0.0, toterr = 0.0;
    for (int i = 0; i < init; ++i) {
        const double sa = a + (b - a) * static_cast<double>(i) / init;
        const double sb = a + (b - a) * static_cast<double>(i + 1) / init;
        const detail::Segment s = detail::gk15(f, sa, sb);
        if (!std::isfinite(s.value) || !std::isfinite(s.error))
            throw NumericError("integrate: non-finite integrand value");
        total += s.value;
        toterr += s.error;
        heap.push(s);
    }
    int n = init;
    while (toterr > std::max(ctl.abs_tol, ctl.rel_tol * std::fabs(total))) {
        if (n >= ctl.max_subdivisions)
            throw NumericError("integrate: tolerance not met; achieved error " +
                               std::to_string(toterr) + " after " +
                               std::to_string(n) + " subdivisions");
        const detail::Segment worst = heap.top();
        heap.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (mid <= worst.a || mid >= worst.b) {
            // interval at machine resolution; accept as is
            heap.push({worst.a, worst.b, worst.value, 0.0});
            toterr -= worst.error;
            continue;
        }
        const detail::Segment left = detail::gk15(f, worst.a, mid);
        const detail::Segment right = detail::gk15(f, mid, worst.b);
        if (!std::isfinite(left.value) || !std::isfinite(right.value))
            throw NumericError("integrate: non-finite integrand value");
        total += left.value + right.value - worst.value;
        toterr += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
        ++n;
    }
    return {total, toterr, n};
}

}  // namespace irsop
