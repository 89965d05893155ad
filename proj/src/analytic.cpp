#include "magspec/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "magspec/errors.hpp"
#include "magspec/specfun.hpp"

namespace magspec::analytic {

namespace {

constexpr double kPi = std::numbers::pi;

// Hard ceiling on lattice points visited in one enumeration pass.
constexpr long long kMaxLatticePoints = 60'000'000;

// Appends every sum_i m_i^2 w_i <= cap with m_i >= 1, recursing over axes.
// Returns false once the point budget is spent.
bool enumerate(std::span<const double> weights, std::size_t axis, double partial, double cap,
               std::vector<double>& out, long long& visited) {
    if (axis == weights.size()) {
        out.push_back(partial);
        return ++visited <= kMaxLatticePoints;
    }
    // the remaining axes contribute at least their m = 1 terms
    double floor_rest = 0.0;
    for (std::size_t i = axis + 1; i < weights.size(); ++i) floor_rest += weights[i];
    for (long long m = 1;; ++m) {
        const double v = partial + static_cast<double>(m * m) * weights[axis];
        if (v + floor_rest > cap) break;
        if (!enumerate(weights, axis + 1, v, cap, out, visited)) return false;
    }
    return true;
}

}  // namespace

Spectrum box_spectrum(std::span<const double> lengths, int count) {
    const int d = static_cast<int>(lengths.size());
    if (d < 1 || d > kMaxBoxDim) {
        throw DomainError("box_spectrum: dimension " + std::to_string(d) + " outside [1, " +
                          std::to_string(kMaxBoxDim) + "]");
    }
    if (count < 1 || count > kMaxBoxCount) {
        throw DomainError("box_spectrum: count must lie in [1, " +
                          std::to_string(kMaxBoxCount) + "]");
    }
    std::vector<double> weights;
    double measure = 1.0;
    for (double L : lengths) {
        if (!(L > 0.0) || !std::isfinite(L)) {
            throw DomainError("box_spectrum: side lengths must be positive and finite");
        }
        weights.push_back(1.0 / (L * L));
        measure *= L;
    }

    // Weyl: N(cap) ~ v_d |Omega| (pi^2 cap)^{d/2} / (2 pi)^d, started a bit low
    const double v_d = specfun::unit_ball_volume(d);
    double lambda_guess = std::pow(count * std::pow(2.0 * kPi, d) / (v_d * measure), 2.0 / d);
    double cap = std::max(lambda_guess / (kPi * kPi), 0.0);
    double min_cap = 0.0;
    for (double w : weights) min_cap += w;
    cap = std::max(cap, min_cap);

    std::vector<double> values;
    while (true) {
        values.clear();
        long long visited = 0;
        if (!enumerate(weights, 0, 0.0, cap, values, visited)) {
            throw NumericalError("box_spectrum: lattice enumeration exceeded " +
                                 std::to_string(kMaxLatticePoints) + " points");
        }
        if (static_cast<int>(values.size()) >= count) break;
        cap *= 1.5;
    }
    std::partial_sort(values.begin(), values.begin() + count, values.end());
    values.resize(static_cast<std::size_t>(count));

    Spectrum s;
    s.d = d;
    s.source = SpectrumSource::analytic;
    s.measure = measure;
    s.values.reserve(values.size());
    for (double v : values) s.values.push_back(kPi * kPi * v);
    s.degeneracy_flags = degeneracy_flags(s.values);
    return s;
}

Spectrum disk_spectrum(double radius, int count) {
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        throw DomainError("disk_spectrum: radius must be positive and finite");
    }
    if (count < 1 || count > kMaxDiskCount) {
        throw DomainError("disk_spectrum: count must lie in [1, " +
                          std::to_string(kMaxDiskCount) + "]");
    }
    // Weyl for the unit disk: lambda_k ~ 4 k, so j ~ 2 sqrt(k)
    double limit = 2.0 * std::sqrt(static_cast<double>(count)) + 4.0;
    std::vector<double> zeros;
    while (true) {
        zeros.clear();
        for (int n = 0; n < limit; ++n) {
            const auto below = specfun::bessel_zeros_below(n, limit);
            if (below.empty()) break;
            for (double j : below) {
                zeros.push_back(j);
                if (n > 0) zeros.push_back(j);
            }
        }
        if (static_cast<int>(zeros.size()) >= count) break;
        limit *= 1.25;
    }
    std::sort(zeros.begin(), zeros.end());

    Spectrum s;
    s.d = 2;
    s.source = SpectrumSource::analytic;
    s.measure = kPi * radius * radius;
    for (int i = 0; i < count; ++i) {
        const double j = zeros[static_cast<std::size_t>(i)] / radius;
        s.values.push_back(j * j);
    }
    s.degeneracy_flags = degeneracy_flags(s.values);
    return s;
}

double weyl_eigenvalue(int d, double measure, int k) {
    if (d < 1) throw DomainError("weyl_eigenvalue: dimension must be >= 1");
    if (!(measure > 0.0)) throw DomainError("weyl_eigenvalue: measure must be positive");
    if (k < 1) throw DomainError("weyl_eigenvalue: k must be >= 1");
    const double e = 2.0 / d;
    return 4.0 * kPi * kPi * std::pow(specfun::unit_ball_volume(d), -e) * std::pow(measure, -e) *
           std::pow(static_cast<double>(k), e);
}

}  // namespace magspec::analytic
