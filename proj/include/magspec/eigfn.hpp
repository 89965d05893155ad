#pragma once

// Grid eigenfunction analysis: discrete norms, the distribution function and
// decreasing rearrangement, the Bessel comparison profile z, and the
// sup-norm checks built on them.

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "magspec/bounds.hpp"

namespace magspec::eigfn {

using cplx = std::complex<double>;

struct NormReport {
    double sup_norm = 0.0;
    /// p -> (sum |omega_i|^p h^2)^{1/p}
    std::map<double, double> lp;
    /// ||omega||_2 = 1 to 1e-10
    bool l2_normalized = false;
};

/// Throws DomainError for a zero vector, h <= 0 or p <= 0.
NormReport norms(std::span<const cplx> omega, double h, std::span<const double> p_list);

/// mu(t) = |{|omega| > t}|, counted in cells of area h^2.
double distribution_function(std::span<const cplx> omega, double h, double t);

/// |omega| sorted in decreasing order, parameterized by the measure of the
/// superlevel set: u_values[i] holds on (s_grid[i] - h^2, s_grid[i]].
struct RearrangementProfile {
    double h = 0.0;
    std::vector<double> s_grid;
    std::vector<double> u_values;

    /// (sum u_i^p h^2)^{1/p}
    double lp(double p) const;
};

RearrangementProfile decreasing_rearrangement(std::span<const cplx> omega, double h);

/// Radius j_{(d-2)/2} / sqrt(lambda) of the ball S whose Dirichlet ground
/// state has eigenvalue lambda.
double ball_radius(double lambda, int d);

/// v_d radius^d.
double ball_measure(double lambda, int d);

/// z(r) = r^{-(d-2)/2} J_{(d-2)/2}(sqrt(lambda) r) on S, zero outside, with
/// the limit lambda^{(d-2)/4} 2^{-(d-2)/2} / Gamma(d/2) at r = 0.
double z_profile(double lambda, int d, double r);

/// z as a function of the set measure s = v_d r^d.
double z_of_measure(double lambda, int d, double s);

/// ||z||_{L_p(S)} by adaptive quadrature over the radius.
double z_lp_norm(double lambda, int d, double p);

/// Two checks: Chiti, sup <= C_d(p) lambda^{d/2p} ||omega||_p, and the heat
/// bound, sup <= tilde C_d lambda^{d/4} ||omega||_2.
std::vector<bounds::BoundCheck> chiti_check(std::span<const cplx> omega, double h, double lambda,
                                            int d, double p, const bounds::SlackPolicy& policy);

/// lhs / rhs of the Chiti inequality for the profile z itself, evaluated by
/// quadrature. Equals 1 in exact arithmetic.
double chiti_ratio_analytic(double lambda, int d, double p);

struct ComparisonResult {
    /// |S| <= measure with slack ball_slack_c * h * measure.
    bounds::BoundCheck ball_inclusion;
    /// min over cell midpoints in [0, |S|] of u(s) - v(s), against -tol z(0).
    bounds::BoundCheck domination;
    double s_measure = 0.0;
    double z0 = 0.0;
    /// max |u - v| / z(0) over the same midpoints, for equality cases
    double max_deviation = 0.0;
    int compared_points = 0;
};

/// Faber-Krahn inclusion and the comparison u >= v after scaling omega so
/// that its sup norm equals z(0).
ComparisonResult comparison_check(std::span<const cplx> omega, double h, double lambda, int d,
                                  double measure, double tol = 0.02, double ball_slack_c = 2.0);

/// Fraction of sampled set-measure points where the rearranged profile
/// violates -u'(s) <= d^{-2} v_d^{-2/d} lambda s^{-2+2/d} int_0^s u. The check
/// passes when at most `max_fraction` of the points violate it by more than
/// `rel_slack`. Always a diagnostic.
bounds::BoundCheck rearrangement_ode_check(const RearrangementProfile& profile, double lambda,
                                           int d, double max_fraction = 0.05,
                                           double rel_slack = 0.05);

}  // namespace magspec::eigfn
