#include "magspec/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "magspec/errors.hpp"
#include "magspec/specfun.hpp"

namespace magspec::bounds {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTiny = 1e-300;

void require_nonempty(const Spectrum& spec, const char* what) {
    if (spec.values.empty()) throw DomainError(std::string(what) + ": empty spectrum");
}

// The k-indexed checks need lambda_1..lambda_k (plus lambda_{k+1} when
// `next` is set).
void require_k(const Spectrum& spec, int k, bool next, const char* what) {
    require_nonempty(spec, what);
    if (k < 1) throw InputError(std::string(what) + ": k must be >= 1");
    const auto need = static_cast<std::size_t>(k) + (next ? 1 : 0);
    if (spec.size() < need) {
        throw InputError(std::string(what) + ": needs " + std::to_string(need) +
                         " eigenvalues, spectrum has " + std::to_string(spec.size()));
    }
}

double partial_sum(const Spectrum& spec, int k) {
    double s = 0.0;
    for (int j = 1; j <= k; ++j) s += spec.lambda(static_cast<std::size_t>(j));
    return s;
}

double v(int d) { return specfun::unit_ball_volume(d); }

std::map<std::string, double> base_context(const Spectrum& spec) {
    return {{"d", static_cast<double>(spec.d)}, {"lambda_1", spec.values.front()}};
}

}  // namespace

std::string to_string(Verdict verdict) {
    switch (verdict) {
        case Verdict::pass: return "pass";
        case Verdict::pass_tolerance: return "pass_tolerance";
        case Verdict::fail: return "fail";
        case Verdict::not_applicable: return "not_applicable";
        case Verdict::error: return "error";
    }
    return "unknown";
}

double SlackPolicy::slack(double scale) const {
    return std::max(floor, coefficient * std::abs(scale));
}

SlackPolicy policy_for(const Spectrum& spec) {
    if (spec.source == SpectrumSource::discrete && spec.h) return SlackPolicy::discrete(*spec.h);
    return SlackPolicy::analytic();
}

BoundCheck make_check(std::string name, double lhs, double rhs, double margin,
                      const SlackPolicy& policy, std::map<std::string, double> context,
                      double scale) {
    BoundCheck c;
    c.name = std::move(name);
    c.lhs = lhs;
    c.rhs = rhs;
    c.margin = margin;
    const double magnitude = std::max({std::abs(lhs), std::abs(rhs), kTiny});
    c.relative_margin = margin / magnitude;
    c.slack = policy.slack(scale >= 0.0 ? scale : magnitude);
    if (!std::isfinite(margin)) {
        c.verdict = Verdict::error;
        c.note = "non-finite margin";
    } else if (margin >= 0.0) {
        c.verdict = Verdict::pass;
    } else if (margin >= -c.slack) {
        c.verdict = Verdict::pass_tolerance;
    } else {
        c.verdict = Verdict::fail;
    }
    c.pass = c.verdict == Verdict::pass || c.verdict == Verdict::pass_tolerance;
    c.context = std::move(context);
    return c;
}

BoundCheck not_applicable(std::string name, std::string note,
                          std::map<std::string, double> context) {
    BoundCheck c;
    c.name = std::move(name);
    c.verdict = Verdict::not_applicable;
    c.pass = true;
    c.note = std::move(note);
    c.context = std::move(context);
    return c;
}

double riesz_mean(const Spectrum& spec, double lambda) {
    require_nonempty(spec, "riesz_mean");
    if (!(lambda >= 0.0) || !std::isfinite(lambda)) {
        throw DomainError("riesz_mean: lambda must be finite and >= 0");
    }
    if (spec.values.back() < lambda) {
        throw TruncationError("riesz_mean: spectrum ends at " + std::to_string(spec.values.back()) +
                              ", below lambda = " + std::to_string(lambda));
    }
    double sum = 0.0;
    for (double l : spec.values) {
        if (l >= lambda) break;
        sum += lambda - l;
    }
    return sum;
}

double legendre_transform_riesz(const Spectrum& spec, double p) {
    require_nonempty(spec, "legendre_transform_riesz");
    if (!(p >= 0.0) || !std::isfinite(p)) {
        throw DomainError("legendre_transform_riesz: p must be finite and >= 0");
    }
    const double whole = std::floor(p);
    const double frac = p - whole;
    const auto n = static_cast<std::size_t>(whole);
    if (n > spec.size() || (frac > 0.0 && n + 1 > spec.size())) {
        throw TruncationError("legendre_transform_riesz: p = " + std::to_string(p) + " needs " +
                              std::to_string(n + 1) + " eigenvalues, spectrum has " +
                              std::to_string(spec.size()));
    }
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) sum += spec.values[j];
    if (frac > 0.0) sum += frac * spec.values[n];
    return sum;
}

BoundCheck check_berezin_li_yau(const Spectrum& spec, double measure, double lambda,
                                const SlackPolicy& policy) {
    if (!(measure > 0.0)) throw InputError("berezin_li_yau: measure must be positive");
    const int d = spec.d;
    const double lhs = riesz_mean(spec, lambda);
    const double rhs = 2.0 / (d + 2) * v(d) * measure * std::pow(lambda, 1.0 + 0.5 * d);
    auto ctx = base_context(spec);
    ctx["lambda"] = lambda;
    ctx["measure"] = measure;
    return make_check("berezin_li_yau", lhs, rhs, rhs - lhs, policy, std::move(ctx));
}

BoundCheck check_berezin_li_yau_sharp(const Spectrum& spec, double measure, double lambda,
                                      const SlackPolicy& policy) {
    if (!(measure > 0.0)) throw InputError("berezin_li_yau_sharp: measure must be positive");
    const int d = spec.d;
    const double lhs = riesz_mean(spec, lambda);
    const double rhs = 2.0 / (d + 2) * v(d) * std::pow(2.0 * kPi, -d) * measure *
                       std::pow(lambda, 1.0 + 0.5 * d);
    auto ctx = base_context(spec);
    ctx["lambda"] = lambda;
    ctx["measure"] = measure;
    auto c = make_check("berezin_li_yau_sharp", lhs, rhs, rhs - lhs, policy, std::move(ctx));
    c.hard = false;
    return c;
}

BoundCheck check_li_yau(const Spectrum& spec, double measure, int k, const SlackPolicy& policy) {
    if (!(measure > 0.0)) throw InputError("li_yau: measure must be positive");
    require_k(spec, k, false, "li_yau");
    const int d = spec.d;
    const double e = 2.0 / d;
    const double lhs = 4.0 * kPi * kPi * d / (d + 2) * std::pow(v(d), -e) * std::pow(measure, -e) *
                       std::pow(static_cast<double>(k), 1.0 + e);
    const double rhs = partial_sum(spec, k);
    auto ctx = base_context(spec);
    ctx["k"] = k;
    ctx["measure"] = measure;
    return make_check("li_yau", lhs, rhs, rhs - lhs, policy, std::move(ctx));
}

double main_lhs(int d, double lambda1, double lambda) {
    const double gap = std::max(lambda - lambda1, 0.0);
    return 2.0 / (d + 2) / specfun::h_constant(d) * std::pow(lambda1, -0.5 * d) *
           std::pow(gap, 1.0 + 0.5 * d);
}

BoundCheck check_main(const Spectrum& spec, double lambda, const SlackPolicy& policy) {
    require_nonempty(spec, "main");
    const double rhs = riesz_mean(spec, lambda);
    const double lhs = main_lhs(spec.d, spec.values.front(), lambda);
    auto ctx = base_context(spec);
    ctx["lambda"] = lambda;
    ctx["H_d"] = specfun::h_constant(spec.d);
    return make_check("main", lhs, rhs, rhs - lhs, policy, std::move(ctx));
}

BoundCheck check_main_legendre(const Spectrum& spec, int k, const SlackPolicy& policy) {
    require_k(spec, k, false, "main_legendre");
    const int d = spec.d;
    const double l1 = spec.values.front();
    double lhs = 0.0;
    for (int j = 1; j <= k; ++j) lhs += spec.lambda(static_cast<std::size_t>(j)) - l1;
    const double H = specfun::h_constant(d);
    const double rhs = static_cast<double>(d) / (d + 2) * std::pow(H, 2.0 / d) * l1 *
                       std::pow(static_cast<double>(k), 1.0 + 2.0 / d);
    auto ctx = base_context(spec);
    ctx["k"] = k;
    ctx["H_d"] = H;
    // the sum of gaps cancels lambda_1 k; rounding follows that size
    return make_check("main_legendre", lhs, rhs, rhs - lhs, policy, std::move(ctx),
                      std::max(rhs, partial_sum(spec, k)));
}

std::vector<BoundCheck> check_ratio_bounds(const Spectrum& spec, int k, const SlackPolicy& policy) {
    require_k(spec, k, true, "ratio_bounds");
    const int d = spec.d;
    const double l1 = spec.values.front();
    const double next = spec.lambda(static_cast<std::size_t>(k) + 1);
    const double H2d = std::pow(specfun::h_constant(d), 2.0 / d);
    const double k2d = std::pow(static_cast<double>(k), 2.0 / d);
    const double single = l1 * (1.0 + std::pow(1.0 + 0.5 * d, 2.0 / d) * H2d * k2d);
    const double yang = l1 * (1.0 + 4.0 / d) * (1.0 + static_cast<double>(d) / (d + 2) * H2d * k2d);
    const double ppw = l1 * std::pow(1.0 + 4.0 / d, k);
    auto ctx = base_context(spec);
    ctx["k"] = k;
    ctx["lambda_k+1"] = next;
    return {make_check("main_single", next, single, single - next, policy, ctx),
            make_check("main_yang", next, yang, yang - next, policy, ctx),
            make_check("ppw_ratio", next, ppw, ppw - next, policy, ctx)};
}

BoundCheck check_yang(const Spectrum& spec, int k, const SlackPolicy& policy) {
    require_k(spec, k, true, "yang");
    const double c = 1.0 + 4.0 / spec.d;
    const double next = spec.lambda(static_cast<std::size_t>(k) + 1);
    double lhs = 0.0;
    double scale = 0.0;
    for (int j = 1; j <= k; ++j) {
        const double l = spec.lambda(static_cast<std::size_t>(j));
        lhs += (next - l) * (next - c * l);
        scale += std::abs(next - l) * (next + c * l);
    }
    auto ctx = base_context(spec);
    ctx["k"] = k;
    ctx["lambda_k+1"] = next;
    return make_check("yang", lhs, 0.0, -lhs, policy, std::move(ctx), scale);
}

std::vector<BoundCheck> check_yang_corollaries(const Spectrum& spec, int k,
                                               const SlackPolicy& policy) {
    require_k(spec, k, true, "yang_corollaries");
    const int d = spec.d;
    const double next = spec.lambda(static_cast<std::size_t>(k) + 1);
    const double last = spec.lambda(static_cast<std::size_t>(k));
    const double mean = partial_sum(spec, k) / k;
    auto ctx = base_context(spec);
    ctx["k"] = k;
    ctx["lambda_k+1"] = next;

    std::vector<BoundCheck> out;
    const double y_rhs = (1.0 + 4.0 / d) * mean;
    out.push_back(make_check("yang_second", next, y_rhs, y_rhs - next, policy, ctx));

    if (next - last <= kDegeneracyGap * last) {
        out.push_back(not_applicable("hile_protter",
                                     "lambda_{k+1} and lambda_k are degenerate; the sum is "
                                     "undefined or dominated by a vanishing gap",
                                     ctx));
    } else {
        double sum = 0.0;
        for (int j = 1; j <= k; ++j) {
            const double l = spec.lambda(static_cast<std::size_t>(j));
            sum += l / (next - l);
        }
        const double lhs = sum / k;
        out.push_back(make_check("hile_protter", lhs, 0.25 * d, lhs - 0.25 * d, policy, ctx));
    }

    const double gap = next - last;
    const double p_rhs = 4.0 / d * mean;
    out.push_back(make_check("ppw_gap", gap, p_rhs, p_rhs - gap, policy, ctx,
                             std::max(next, p_rhs)));
    return out;
}

double laptev_lhs(int d, double sup_norm_omega, double lambda1, double lambda) {
    if (!(sup_norm_omega > 0.0)) throw DomainError("laptev: sup norm must be positive");
    const double gap = std::max(lambda - lambda1, 0.0);
    return 2.0 * v(d) / ((d + 2) * std::pow(2.0 * kPi, d)) / (sup_norm_omega * sup_norm_omega) *
           std::pow(gap, 1.0 + 0.5 * d);
}

BoundCheck check_laptev(const Spectrum& spec, double sup_norm_omega, double lambda,
                        const SlackPolicy& policy) {
    require_nonempty(spec, "laptev");
    const double rhs = riesz_mean(spec, lambda);
    const double lhs = laptev_lhs(spec.d, sup_norm_omega, spec.values.front(), lambda);
    auto ctx = base_context(spec);
    ctx["lambda"] = lambda;
    ctx["sup_norm_omega"] = sup_norm_omega;
    return make_check("laptev", lhs, rhs, rhs - lhs, policy, std::move(ctx));
}

}  // namespace magspec::bounds
