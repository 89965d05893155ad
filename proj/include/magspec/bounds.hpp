#pragma once

// The eigenvalue inequalities as explicit checks with signed margins.
//
// Every check reports lhs, rhs and a margin oriented so that margin >= 0 means
// the inequality holds. A negative margin within the slack is accepted with
// the verdict pass_tolerance; the slack absorbs rounding for exact spectra and
// the O(h^2) discretization error for grid spectra.

#include <map>
#include <string>
#include <vector>

#include "magspec/spectrum.hpp"

namespace magspec::bounds {

enum class Verdict { pass, pass_tolerance, fail, not_applicable, error };

std::string to_string(Verdict v);

struct BoundCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double margin = 0.0;
    /// margin / max(|lhs|, |rhs|, tiny)
    double relative_margin = 0.0;
    double slack = 0.0;
    bool pass = false;
    Verdict verdict = Verdict::fail;
    /// Diagnostics do not enter the overall verdict.
    bool hard = true;
    std::map<std::string, double> context;
    std::string note;
};

/// slack = max(floor, coefficient * scale), where scale is the magnitude of
/// the compared quantities.
struct SlackPolicy {
    double floor = 0.0;
    double coefficient = 1e-10;

    double slack(double scale) const;

    static SlackPolicy analytic() { return {0.0, 1e-10}; }
    /// max(1e-8, c_tol h^2 scale)
    static SlackPolicy discrete(double h, double c_tol = 10.0) { return {1e-8, c_tol * h * h}; }
};

/// Slack policy matching where the spectrum came from.
SlackPolicy policy_for(const Spectrum& spec);

/// Fills margin-derived fields. `scale` defaults to max(|lhs|, |rhs|).
BoundCheck make_check(std::string name, double lhs, double rhs, double margin,
                      const SlackPolicy& policy, std::map<std::string, double> context,
                      double scale = -1.0);

BoundCheck not_applicable(std::string name, std::string note,
                          std::map<std::string, double> context = {});

/// sum_j (lambda - lambda_j)_+. Throws DomainError for an empty spectrum or
/// lambda < 0, and TruncationError when the last value lies below lambda.
double riesz_mean(const Spectrum& spec, double lambda);

/// {p} lambda_{[p]+1} + sum_{j <= [p]} lambda_j, the Legendre transform of
/// lambda -> riesz_mean(lambda). TruncationError when the spectrum is short.
double legendre_transform_riesz(const Spectrum& spec, double p);

/// sum_j (lambda - lambda_j)_+ <= (2/(d+2)) v_d |Omega| lambda^{1+d/2}
BoundCheck check_berezin_li_yau(const Spectrum& spec, double measure, double lambda,
                                const SlackPolicy& policy);

/// The same sum against the semiclassical constant (2/(d+2)) v_d (2 pi)^{-d}.
/// Reported as a diagnostic.
BoundCheck check_berezin_li_yau_sharp(const Spectrum& spec, double measure, double lambda,
                                      const SlackPolicy& policy);

/// sum_{j<=k} lambda_j >= (4 pi^2 d/(d+2)) v_d^{-2/d} |Omega|^{-2/d} k^{1+2/d}
BoundCheck check_li_yau(const Spectrum& spec, double measure, int k, const SlackPolicy& policy);

/// Lower bound of the main theorem on the Riesz mean.
double main_lhs(int d, double lambda1, double lambda);

/// riesz_mean >= (2/(d+2)) H_d^{-1} lambda_1^{-d/2} (lambda - lambda_1)_+^{1+d/2}
BoundCheck check_main(const Spectrum& spec, double lambda, const SlackPolicy& policy);

/// sum_{j<=k} (lambda_j - lambda_1) <= (d/(d+2)) H_d^{2/d} lambda_1 k^{1+2/d}
BoundCheck check_main_legendre(const Spectrum& spec, int k, const SlackPolicy& policy);

/// Upper bounds on lambda_{k+1}: mainsingle, mainyang and ppw, in that order.
std::vector<BoundCheck> check_ratio_bounds(const Spectrum& spec, int k,
                                           const SlackPolicy& policy);

/// sum_{j<=k} (lambda_{k+1} - lambda_j)(lambda_{k+1} - (1+4/d) lambda_j) <= 0
BoundCheck check_yang(const Spectrum& spec, int k, const SlackPolicy& policy);

/// Second Yang, Hile-Protter and Payne-Polya-Weinberger inequalities. The
/// Hile-Protter check is not applicable when lambda_{k+1} and lambda_k are
/// degenerate.
std::vector<BoundCheck> check_yang_corollaries(const Spectrum& spec, int k,
                                               const SlackPolicy& policy);

/// Lower bound in terms of the sup norm of a unit ground state.
double laptev_lhs(int d, double sup_norm_omega, double lambda1, double lambda);

/// riesz_mean >= (2 v_d/((d+2)(2 pi)^d)) ||omega||_inf^{-2} (lambda - lambda_1)_+^{1+d/2}
BoundCheck check_laptev(const Spectrum& spec, double sup_norm_omega, double lambda,
                        const SlackPolicy& policy);

}  // namespace magspec::bounds
