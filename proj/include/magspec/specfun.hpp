#pragma once

// Bessel functions of integer and half-integer order, their positive zeros,
// adaptive Gauss-Kronrod quadrature, and the dimension-dependent constants
// entering the eigenvalue bounds.

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <span>
#include <vector>

#include "magspec/errors.hpp"

namespace magspec::specfun {

/// Largest supported Bessel order. Orders must be multiples of 1/2.
inline constexpr double kMaxOrder = 256.0;

/// Below this argument the ascending series is used (evaluated in extended
/// precision); above it the Hankel expansion plus three-term recurrences.
inline constexpr double kSeriesLimit = 17.0;

/// Supported dimensions for the constants table.
inline constexpr int kMinDim = 2;
inline constexpr int kMaxDim = 10;

bool is_supported_order(double order);

/// J_order(x) for order in {0, 1/2, 1, ..., kMaxOrder} and x >= 0.
/// Throws DomainError for unsupported order or negative/non-finite x.
double bessel_j(double order, double x);

/// Ascending power series only; exposed for the branch-overlap tests.
double bessel_j_series(double order, double x);

/// Large-argument branch only (Hankel expansion with recurrences).
double bessel_j_large(double order, double x);

/// m-th positive zero of J_order (m >= 1).
double bessel_zero(double order, int m);

/// First `count` positive zeros of J_order, in increasing order.
std::vector<double> bessel_zeros(double order, int count);

/// All positive zeros of J_order strictly below `limit`.
std::vector<double> bessel_zeros_below(double order, double limit);

struct QuadratureResult {
    double value = 0.0;
    double error = 0.0;
    int intervals = 0;
    bool converged = false;
};

namespace detail {

struct GaussKronrod15 {
    static constexpr double nodes[8] = {
        0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
        0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
        0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
        0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
    static constexpr double kronrod[8] = {
        0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
        0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
        0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
        0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
    static constexpr double gauss[4] = {
        0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
        0.381830050505118944950369775488975, 0.417959183673469387755102040816327};
};

struct Panel {
    double a, b, value, error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel gk15(F& f, double a, double b) {
    using R = GaussKronrod15;
    const double c = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(c);
    double k = R::kronrod[7] * fc;
    double g = R::gauss[3] * fc;
    for (int i = 0; i < 7; ++i) {
        const double dx = half * R::nodes[i];
        const double pair = f(c - dx) + f(c + dx);
        k += R::kronrod[i] * pair;
        if (i % 2 == 1) g += R::gauss[i / 2] * pair;
    }
    return {a, b, k * half, std::abs((k - g) * half)};
}

}  // namespace detail

/// Globally adaptive 7/15-point Gauss-Kronrod quadrature. The panel with the
/// largest error estimate is bisected until the summed estimate drops below
/// max(abs_tol, rel_tol * |integral|). The integrand is never evaluated at
/// the endpoints.
template <class F>
QuadratureResult integrate(F&& f, double a, double b, double rel_tol, double abs_tol = 0.0,
                           int max_panels = 20000) {
    std::priority_queue<detail::Panel> panels;
    auto first = detail::gk15(f, a, b);
    double value = first.value;
    double error = first.error;
    panels.push(first);
    while (error > std::max(abs_tol, rel_tol * std::abs(value))) {
        if (static_cast<int>(panels.size()) >= max_panels) {
            return {value, error, static_cast<int>(panels.size()), false};
        }
        const auto worst = panels.top();
        panels.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        const auto left = detail::gk15(f, worst.a, mid);
        const auto right = detail::gk15(f, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
    }
    // Re-sum to shed the drift of the running updates.
    value = 0.0;
    error = 0.0;
    const int count = static_cast<int>(panels.size());
    while (!panels.empty()) {
        value += panels.top().value;
        error += panels.top().error;
        panels.pop();
    }
    return {value, error, count, true};
}

/// Volume of the d-dimensional unit ball, pi^{d/2} / Gamma(1 + d/2).
double unit_ball_volume(int d);

/// Surface area of the unit sphere S^{d-1}, d * v_d.
double unit_sphere_area(int d);

/// First positive zero of J_{(d-2)/2}, the radius of the unit-eigenvalue ball.
double ball_zero(int d);

/// H_d = 2d / (j^2 J_{d/2}(j)^2) with j the first zero of J_{(d-2)/2}.
double h_constant(int d);

/// Closed form of the sharp sup-norm constant at p = 2.
double chiti_constant_closed(int d);

/// Sharp sup-norm constant C_d(p) by adaptive quadrature, relative accuracy 1e-11.
double chiti_constant(int d, double p);

/// Non-sharp heat-kernel constant (e / (d pi))^{d/4}.
double heat_constant(int d);

struct ConstantsTable {
    int d = 0;
    double v_d = 0.0;
    double H_d = 0.0;
    double C_d_closed = 0.0;
    std::map<double, double> C_d_p;
    double tilde_C_d = 0.0;
};

/// Throws DomainError for d outside [kMinDim, kMaxDim] or p <= 0, and
/// NumericalError if a quadrature misses its tolerance.
ConstantsTable constants_table(int d, std::span<const double> p_list);

}  // namespace magspec::specfun
