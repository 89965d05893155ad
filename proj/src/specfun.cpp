#include "magspec/specfun.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace magspec::specfun {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_integer(double v) { return v == std::floor(v); }

void require_order(double order) {
    if (!is_supported_order(order)) {
        throw DomainError("bessel: unsupported order " + std::to_string(order) +
                          " (need a non-negative multiple of 1/2 up to " +
                          std::to_string(kMaxOrder) + ")");
    }
}

void require_argument(double x) {
    if (!std::isfinite(x) || x < 0.0) {
        throw DomainError("bessel: argument must be finite and non-negative, got " +
                          std::to_string(x));
    }
}

// Hankel expansion of J_nu for nu in {0, 1}; optimally truncated.
double hankel(double nu, double x) {
    const double mu = 4.0 * nu * nu;
    double p = 1.0;
    double q = 0.0;
    double term = 1.0;
    double previous = 1.0;
    for (int k = 1; k < 200; ++k) {
        const double odd = 2.0 * k - 1.0;
        term *= (mu - odd * odd) / (8.0 * k * x);
        if (std::abs(term) > std::abs(previous)) break;
        const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
        if (k % 2 == 0) {
            p += sign * term;
        } else {
            q += sign * term;
        }
        if (std::abs(term) < 1e-18) break;
        previous = term;
    }
    const double phase = (0.5 * nu + 0.25) * kPi;
    const double cx = std::cos(x);
    const double sx = std::sin(x);
    const double cos_chi = cx * std::cos(phase) + sx * std::sin(phase);
    const double sin_chi = sx * std::cos(phase) - cx * std::sin(phase);
    return std::sqrt(2.0 / (kPi * x)) * (p * cos_chi - q * sin_chi);
}

// Exact seeds for the recurrence: (J_base, J_{base+1}) with base = 0 or -1/2.
struct Seed {
    double base;
    double lower;
    double upper;
};

Seed seed_pair(double order, double x) {
    if (is_integer(order)) return {0.0, hankel(0.0, x), hankel(1.0, x)};
    const double amp = std::sqrt(2.0 / (kPi * x));
    return {-0.5, amp * std::cos(x), amp * std::sin(x)};
}

// Miller's backward recurrence, normalized against the larger of the two seeds.
double backward(double order, double x, const Seed& seed) {
    const double top = std::max(order, x);
    const int steps_above = 40 + static_cast<int>(2.0 * std::sqrt(40.0 * top));
    const int n_target = static_cast<int>(std::lround(order - seed.base));
    const int n_start = static_cast<int>(std::ceil(top - seed.base)) + steps_above;

    double f_next = 0.0;  // f at index n+1
    double f_cur = 1.0;   // f at index n
    double at_target = (n_start == n_target) ? f_cur : 0.0;
    for (int n = n_start; n > 0; --n) {
        const double mu = seed.base + n;
        const double f_prev = (2.0 * mu / x) * f_cur - f_next;
        f_next = f_cur;
        f_cur = f_prev;
        if (n - 1 == n_target) at_target = f_cur;
        if (std::abs(f_cur) > 1e250) {
            f_cur *= 1e-250;
            f_next *= 1e-250;
            at_target *= 1e-250;
        }
    }
    // f_cur ~ J_base, f_next ~ J_{base+1}
    const double scale = std::abs(seed.lower) > std::abs(seed.upper) ? seed.lower / f_cur
                                                                     : seed.upper / f_next;
    return at_target * scale;
}

}  // namespace

bool is_supported_order(double order) {
    return std::isfinite(order) && order >= 0.0 && order <= kMaxOrder && is_integer(2.0 * order);
}

double bessel_j_series(double order, double x) {
    require_order(order);
    require_argument(x);
    if (x == 0.0) return order == 0.0 ? 1.0 : 0.0;
    const long double half = static_cast<long double>(x) / 2.0L;
    const long double nu = order;
    long double term = order == 0.0 ? 1.0L : std::pow(half, nu) / std::tgamma(nu + 1.0L);
    if (term == 0.0L) return 0.0;
    long double sum = term;
    const long double sq = half * half;
    for (int k = 1; k < 1000; ++k) {
        term *= -sq / (static_cast<long double>(k) * (k + nu));
        sum += term;
        if (k > half && std::abs(term) < 1e-22L * std::abs(sum)) break;
    }
    return static_cast<double>(sum);
}

double bessel_j_large(double order, double x) {
    require_order(order);
    require_argument(x);
    if (x <= 0.0) throw DomainError("bessel_j_large: argument must be positive");
    const Seed seed = seed_pair(order, x);
    if (order == seed.base) return seed.lower;
    if (order < x) {
        double lower = seed.lower;
        double upper = seed.upper;
        for (double mu = seed.base + 1.0; mu < order; mu += 1.0) {
            const double next = (2.0 * mu / x) * upper - lower;
            lower = upper;
            upper = next;
        }
        return upper;
    }
    return backward(order, x, seed);
}

double bessel_j(double order, double x) {
    require_order(order);
    require_argument(x);
    if (x <= kSeriesLimit) return bessel_j_series(order, x);
    return bessel_j_large(order, x);
}

namespace {

// d/dx J_nu = (nu/x) J_nu - J_{nu+1}
double bessel_derivative(double order, double x) {
    return (order / x) * bessel_j(order, x) - bessel_j(order + 1.0, x);
}

double refine_zero(double order, double lo, double hi) {
    double f_lo = bessel_j(order, lo);
    for (int it = 0; it < 200 && hi - lo > 1e-12; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double f_mid = bessel_j(order, mid);
        if (f_mid == 0.0) return mid;
        if ((f_mid > 0.0) == (f_lo > 0.0)) {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    double x = 0.5 * (lo + hi);
    for (int newton = 0; newton < 2; ++newton) {
        const double deriv = bessel_derivative(order, x);
        if (deriv == 0.0) break;
        x -= bessel_j(order, x) / deriv;
    }
    return x;
}

template <class Stop>
std::vector<double> scan_zeros(double order, Stop stop, double hard_limit) {
    std::vector<double> zeros;
    constexpr double kStep = 0.5;
    double x = std::max(order, 0.25);
    double fx = bessel_j(order, x);
    while (!stop(zeros, x)) {
        if (x > hard_limit) {
            throw NumericalError("bessel_zero: bracketing for order " + std::to_string(order) +
                                 " passed x = " + std::to_string(hard_limit) + " after " +
                                 std::to_string(zeros.size()) + " zeros");
        }
        const double next = x + kStep;
        const double f_next = bessel_j(order, next);
        if (f_next == 0.0) {
            zeros.push_back(next);
            x = next + 1e-9;
            fx = bessel_j(order, x);
            continue;
        }
        if ((fx > 0.0) != (f_next > 0.0)) zeros.push_back(refine_zero(order, x, next));
        x = next;
        fx = f_next;
    }
    return zeros;
}

}  // namespace

std::vector<double> bessel_zeros(double order, int count) {
    require_order(order);
    if (count < 1) throw DomainError("bessel_zeros: count must be >= 1");
    // McMahon: j_{nu,m} ~ (m + nu/2 - 1/4) pi, generous margin for the hard limit.
    const double limit = (count + 0.5 * order + 2.0) * kPi + 2.0 * order + 50.0;
    return scan_zeros(
        order, [count](const std::vector<double>& z, double) {
            return static_cast<int>(z.size()) >= count;
        },
        limit);
}

std::vector<double> bessel_zeros_below(double order, double limit) {
    require_order(order);
    if (!std::isfinite(limit)) throw DomainError("bessel_zeros_below: limit must be finite");
    auto zeros = scan_zeros(
        order, [limit](const std::vector<double>&, double x) { return x >= limit; },
        limit + 1.0);
    while (!zeros.empty() && zeros.back() >= limit) zeros.pop_back();
    return zeros;
}

double bessel_zero(double order, int m) {
    if (m < 1) throw DomainError("bessel_zero: index m must be >= 1");
    return bessel_zeros(order, m).back();
}

double unit_ball_volume(int d) {
    if (d < 1) throw DomainError("unit_ball_volume: dimension must be >= 1");
    return std::pow(kPi, 0.5 * d) / std::tgamma(1.0 + 0.5 * d);
}

double unit_sphere_area(int d) { return d * unit_ball_volume(d); }

namespace {

void require_dimension(int d) {
    if (d < kMinDim || d > kMaxDim) {
        throw DomainError("constants: dimension " + std::to_string(d) + " outside [" +
                          std::to_string(kMinDim) + ", " + std::to_string(kMaxDim) + "]");
    }
}

}  // namespace

double ball_zero(int d) {
    require_dimension(d);
    return bessel_zero(0.5 * (d - 2), 1);
}

double h_constant(int d) {
    const double j = ball_zero(d);
    const double jd = bessel_j(0.5 * d, j);
    return 2.0 * d / (j * j * jd * jd);
}

double chiti_constant_closed(int d) {
    const double j = ball_zero(d);
    const double jd = bessel_j(0.5 * d, j);
    const double inner =
        std::pow(kPi, 0.5 * d) * std::pow(2.0, d - 2) * std::tgamma(0.5 * d) * j * j * jd * jd;
    return 1.0 / std::sqrt(inner);
}

double chiti_constant(int d, double p) {
    require_dimension(d);
    if (!(p > 0.0) || !std::isfinite(p)) {
        throw DomainError("chiti_constant: exponent p must be positive and finite");
    }
    const double nu = 0.5 * (d - 2);
    const double j = ball_zero(d);
    const double origin = std::pow(2.0, -nu) / std::tgamma(nu + 1.0);
    auto integrand = [&](double r) {
        // r^{-nu} J_nu(r) with its finite limit at the origin
        const double radial = r < 1e-10 ? origin : bessel_j(nu, r) / std::pow(r, nu);
        return std::pow(std::max(radial, 0.0), p) * std::pow(r, d - 1);
    };
    const auto quad = integrate(integrand, 0.0, j, 1e-12);
    if (!quad.converged) {
        throw NumericalError("chiti_constant: quadrature for d=" + std::to_string(d) +
                             ", p=" + std::to_string(p) + " stalled at relative error " +
                             std::to_string(quad.error / std::abs(quad.value)));
    }
    const double scale = std::pow(2.0, p * nu) * std::pow(std::tgamma(0.5 * d), p) *
                         unit_sphere_area(d) * quad.value;
    return std::pow(scale, -1.0 / p);
}

double heat_constant(int d) {
    require_dimension(d);
    return std::pow(std::numbers::e / (d * kPi), 0.25 * d);
}

ConstantsTable constants_table(int d, std::span<const double> p_list) {
    require_dimension(d);
    ConstantsTable table;
    table.d = d;
    table.v_d = unit_ball_volume(d);
    table.H_d = h_constant(d);
    table.C_d_closed = chiti_constant_closed(d);
    table.tilde_C_d = heat_constant(d);
    for (double p : p_list) table.C_d_p[p] = chiti_constant(d, p);
    return table;
}

}  // namespace magspec::specfun
