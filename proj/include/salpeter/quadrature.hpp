#pragma once

#include "salpeter/errors.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <queue>
#include <vector>

namespace salpeter {

struct QuadratureOptions {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_intervals = 4000;
};

namespace detail {

inline double abs_of(double x) noexcept { return std::abs(x); }
inline double abs_of(const std::complex<double>& z) noexcept { return std::abs(z); }

// 15-point Kronrod extension of 7-point Gauss (positive abscissae; the rule
// is symmetric).  Nodes never touch the interval endpoints, so integrands
// with removable endpoint singularities are safe to pass as-is.
inline constexpr double gk_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};

inline constexpr double gk_weights[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};

inline constexpr double gauss_weights[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <class F, class V>
void gauss_kronrod_15(F& f, double a, double b, V& value, double& error) {
    const double mid = 0.5 * (a + b);
    const double hw = 0.5 * (b - a);

    V fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(mid - hw * gk_nodes[i]);
        fv[14 - i] = f(mid + hw * gk_nodes[i]);
    }
    fv[7] = f(mid);

    V kronrod = gk_weights[7] * fv[7];
    for (int i = 0; i < 7; ++i) kronrod += gk_weights[i] * (fv[i] + fv[14 - i]);

    V gauss = gauss_weights[3] * fv[7];
    for (int i = 0; i < 3; ++i)
        gauss += gauss_weights[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);

    value = kronrod * hw;

    // Error estimate in the QUADPACK style: the raw |K15 - G7| difference is
    // tempered by the mean deviation of the integrand so that smooth segments
    // are not flagged just because both rules happen to agree by accident.
    const V mean = kronrod * 0.5;
    double resasc = gk_weights[7] * abs_of(fv[7] - mean);
    for (int i = 0; i < 7; ++i)
        resasc += gk_weights[i] * (abs_of(fv[i] - mean) + abs_of(fv[14 - i] - mean));
    resasc *= std::abs(hw);

    double err = abs_of(kronrod - gauss) * std::abs(hw);
    if (resasc != 0.0 && err != 0.0)
        err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    error = err;
}

} // namespace detail

/// Adaptive Gauss-Kronrod integration of a double- or complex-valued callable
/// over a finite interval.  Subdivides the segment with the worst local error
/// estimate until the global estimate meets max(abs_tol, rel_tol * |result|),
/// and throws accuracy_failure otherwise.
template <class F>
auto integrate(F&& f, double a, double b, QuadratureOptions opt = {}) {
    using V = decltype(f(a));
    if (a == b) return V{};

    struct Segment {
        double a, b, error;
        V value;
        bool operator<(const Segment& other) const { return error < other.error; }
    };

    std::priority_queue<Segment> queue;
    V total{};
    double total_error = 0.0;

    // Seed with two halves rather than one segment: a single application can
    // under-report the error for integrands symmetric about the midpoint.
    const double mid0 = 0.5 * (a + b);
    for (const auto& [lo, hi] : {std::pair{a, mid0}, std::pair{mid0, b}}) {
        Segment s{lo, hi, 0.0, V{}};
        detail::gauss_kronrod_15(f, lo, hi, s.value, s.error);
        total += s.value;
        total_error += s.error;
        queue.push(s);
    }

    int intervals = 2;
    const double min_width = 16.0 * std::numeric_limits<double>::epsilon() *
                             std::max({std::abs(a), std::abs(b), 1.0});
    while (total_error > std::max(opt.abs_tol, opt.rel_tol * detail::abs_of(total))) {
        const Segment worst = queue.top();
        if (intervals >= opt.max_intervals || (worst.b - worst.a) < min_width)
            throw accuracy_failure("integrate: adaptive refinement stalled",
                                   std::max(opt.abs_tol, opt.rel_tol * detail::abs_of(total)),
                                   total_error);
        queue.pop();
        total -= worst.value;
        total_error -= worst.error;

        const double mid = 0.5 * (worst.a + worst.b);
        for (const auto& [lo, hi] : {std::pair{worst.a, mid}, std::pair{mid, worst.b}}) {
            Segment s{lo, hi, 0.0, V{}};
            detail::gauss_kronrod_15(f, lo, hi, s.value, s.error);
            total += s.value;
            total_error += s.error;
            queue.push(s);
        }
        ++intervals;
    }
    return total;
}

} // namespace salpeter
