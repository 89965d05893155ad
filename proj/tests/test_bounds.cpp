#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "magspec/analytic.hpp"
#include "magspec/bounds.hpp"
#include "magspec/errors.hpp"
#include "magspec/specfun.hpp"
#include "oracle_values.hpp"

using namespace magspec;
using namespace magspec::bounds;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2 = kPi * kPi;
const double kH2 = oracle::kConstants[0].H_d;

Spectrum make(std::vector<double> values, int d = 2) {
    Spectrum s;
    s.d = d;
    s.values = std::move(values);
    s.degeneracy_flags = degeneracy_flags(s.values);
    return s;
}

Spectrum unit_square(int count) {
    const std::vector<double> L{1.0, 1.0};
    return analytic::box_spectrum(L, count);
}

const auto kAnalytic = SlackPolicy::analytic();

// sup over a grid of 1e4 points (plus the eigenvalues, where the sup of a
// piecewise-linear concave function is attained) of p lambda - R(lambda)
double brute_force_legendre(const Spectrum& s, double p) {
    const double top = s.values.back();
    std::vector<double> grid;
    for (int i = 0; i <= 10'000; ++i) grid.push_back(top * i / 10'000.0);
    grid.insert(grid.end(), s.values.begin(), s.values.end());
    double best = -1e300;
    for (double l : grid) best = std::max(best, p * l - riesz_mean(s, l));
    return best;
}

}  // namespace

TEST_CASE("riesz mean") {
    const auto s = make({1, 2, 3});
    CHECK(riesz_mean(s, 2.5) == doctest::Approx(2.0));
    CHECK(riesz_mean(s, 0.0) == 0.0);
    CHECK(riesz_mean(s, 3.0) == doctest::Approx(3.0));
    CHECK_THROWS_AS(riesz_mean(s, 3.5), TruncationError);
    CHECK_THROWS_AS(riesz_mean(s, -1.0), DomainError);
    CHECK_THROWS_AS(riesz_mean(make({}), 1.0), DomainError);

    const auto sq = unit_square(10);
    CHECK(riesz_mean(sq, 5 * kPi2) == doctest::Approx(3 * kPi2).epsilon(1e-14));
}

TEST_CASE("riesz mean is convex and non-decreasing") {
    const auto s = analytic::disk_spectrum(1.0, 100);
    double prev = -1.0;
    double prev_slope = -1.0;
    const double step = s.values.back() / 997;
    for (int i = 0; i < 997; ++i) {
        const double a = riesz_mean(s, i * step);
        const double b = riesz_mean(s, (i + 1) * step);
        CHECK(a >= prev);
        const double slope = (b - a) / step;
        CHECK(slope >= prev_slope - 1e-9);
        prev = a;
        prev_slope = slope;
    }
}

TEST_CASE("Berezin-Li-Yau") {
    const auto sq = unit_square(10);
    const auto c = check_berezin_li_yau(sq, 1.0, 5 * kPi2, kAnalytic);
    CHECK(c.lhs == doctest::Approx(3 * kPi2));
    CHECK(c.rhs == doctest::Approx(12.5 * std::pow(kPi, 5)).epsilon(1e-14));
    CHECK(c.verdict == Verdict::pass);
    CHECK(c.hard);
    CHECK(c.context.at("lambda") == 5 * kPi2);
    CHECK(c.context.at("measure") == 1.0);

    const auto zero = check_berezin_li_yau(sq, 1.0, 0.0, kAnalytic);
    CHECK(zero.margin == 0.0);
    CHECK(zero.verdict == Verdict::pass);

    const auto disk = analytic::disk_spectrum(1.0, 50);
    const auto d = check_berezin_li_yau(disk, kPi, 30.0, kAnalytic);
    CHECK(d.margin > 0.0);

    const auto sharp = check_berezin_li_yau_sharp(sq, 1.0, 5 * kPi2, kAnalytic);
    CHECK_FALSE(sharp.hard);
    CHECK(sharp.rhs == doctest::Approx(c.rhs / (4 * kPi2)));
    CHECK(sharp.pass);
}

TEST_CASE("Li-Yau") {
    const auto sq = unit_square(10);
    const auto c = check_li_yau(sq, 1.0, 3, kAnalytic);
    CHECK(c.rhs == doctest::Approx(12 * kPi2));
    CHECK(c.lhs == doctest::Approx(18 * kPi).epsilon(1e-14));
    CHECK(c.pass);
    const auto disk = analytic::disk_spectrum(1.0, 5);
    const auto d = check_li_yau(disk, kPi, 1, kAnalytic);
    CHECK(d.lhs == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(d.pass);
    CHECK_THROWS_AS(check_li_yau(sq, 1.0, 11, kAnalytic), InputError);
    CHECK_THROWS_AS(check_li_yau(sq, 1.0, 0, kAnalytic), InputError);
}

TEST_CASE("main theorem") {
    const auto sq = unit_square(10);
    const auto c = check_main(sq, 5 * kPi2, kAnalytic);
    CHECK(c.rhs == doctest::Approx(3 * kPi2));
    CHECK(c.lhs == doctest::Approx(0.5 / kH2 / (2 * kPi2) * 9 * kPi2 * kPi2).epsilon(1e-12));
    CHECK(c.lhs == doctest::Approx(8.65).epsilon(1e-3));
    CHECK(c.verdict == Verdict::pass);

    const auto below = check_main(sq, kPi2, kAnalytic);
    CHECK(below.lhs == 0.0);
    CHECK(below.pass);

    const auto disk = analytic::disk_spectrum(1.0, 20);
    CHECK(check_main(disk, 2 * disk.lambda(1), kAnalytic).margin > 0.0);
}

TEST_CASE("main theorem, summed form") {
    const auto sq = unit_square(10);
    CHECK(check_main_legendre(sq, 1, kAnalytic).lhs == 0.0);
    const auto c = check_main_legendre(sq, 2, kAnalytic);
    CHECK(c.lhs == doctest::Approx(3 * kPi2));
    CHECK(c.rhs == doctest::Approx(0.5 * kH2 * 2 * kPi2 * 4).epsilon(1e-12));
    CHECK(c.rhs == doctest::Approx(101.3).epsilon(1e-3));
    CHECK(c.pass);
}

TEST_CASE("ratio bounds") {
    const auto one = make({1.0, 2.0});
    const auto checks = check_ratio_bounds(one, 1, kAnalytic);
    REQUIRE(checks.size() == 3);
    CHECK(checks[0].rhs == doctest::Approx(1 + 2 * kH2).epsilon(1e-12));
    CHECK(checks[0].rhs == doctest::Approx(6.13).epsilon(1e-3));
    CHECK(checks[1].rhs == doctest::Approx(3 * (1 + 0.5 * kH2)).epsilon(1e-12));
    CHECK(checks[1].rhs == doctest::Approx(6.85).epsilon(1e-3));
    CHECK(checks[2].rhs == doctest::Approx(3.0));

    const auto sq = check_ratio_bounds(unit_square(5), 1, kAnalytic);
    CHECK(sq[2].lhs / sq[2].context.at("lambda_1") == doctest::Approx(2.5));
    CHECK(sq[2].pass);
    const auto disk = check_ratio_bounds(analytic::disk_spectrum(1.0, 5), 1, kAnalytic);
    CHECK(disk[2].lhs / disk[2].context.at("lambda_1") == doctest::Approx(2.5387).epsilon(1e-4));
    CHECK(disk[2].margin / disk[2].context.at("lambda_1") >= 0.46);
    CHECK_THROWS_AS(check_ratio_bounds(one, 2, kAnalytic), InputError);
}

TEST_CASE("Yang inequality and corollaries") {
    const auto sq = unit_square(20);
    const auto y1 = check_yang(sq, 1, kAnalytic);
    // k = 1: (l2 - l1)(l2 - 3 l1) <= 0 is l2 <= 3 l1
    CHECK(y1.lhs == doctest::Approx(3 * kPi2 * (-kPi2)));
    CHECK(y1.pass);
    CHECK(check_yang(analytic::disk_spectrum(1.0, 10), 5, kAnalytic).pass);

    const auto c1 = check_yang_corollaries(sq, 1, kAnalytic);
    REQUIRE(c1.size() == 3);
    CHECK(c1[0].name == "yang_second");
    CHECK(c1[0].lhs == doctest::Approx(5 * kPi2));
    CHECK(c1[0].rhs == doctest::Approx(6 * kPi2));
    CHECK(c1[0].pass);

    const auto c2 = check_yang_corollaries(sq, 2, kAnalytic);
    CHECK(c2[1].name == "hile_protter");
    CHECK(c2[1].verdict == Verdict::not_applicable);
    CHECK(c2[1].pass);

    for (const auto& c : check_yang_corollaries(analytic::disk_spectrum(1.0, 10), 3, kAnalytic)) {
        CHECK(c.verdict == Verdict::pass);
    }
}

TEST_CASE("verdicts honour the slack") {
    const SlackPolicy p{1e-8, 1e-3};
    CHECK(make_check("x", 1.0, 1.0, 0.0, p, {}).verdict == Verdict::pass);
    CHECK(make_check("x", 100.0, 99.95, -0.05, p, {}).verdict == Verdict::pass_tolerance);
    CHECK(make_check("x", 100.0, 99.0, -1.0, p, {}).verdict == Verdict::fail);
    CHECK_FALSE(make_check("x", 100.0, 99.0, -1.0, p, {}).pass);
    CHECK(make_check("x", 0.0, 0.0, -5e-9, p, {}).verdict == Verdict::pass_tolerance);
    CHECK(make_check("x", 0.0, 0.0, std::nan(""), p, {}).verdict == Verdict::error);
    const auto rel = make_check("x", 4.0, 2.0, -2.0, p, {});
    CHECK(rel.relative_margin == doctest::Approx(-0.5));

    const auto discrete = SlackPolicy::discrete(1.0 / 64);
    CHECK(discrete.slack(0.0) == 1e-8);
    CHECK(discrete.slack(4096.0) == doctest::Approx(10.0));
}

TEST_CASE("Legendre transform of the Riesz mean") {
    const auto s = make({1, 2, 3});
    CHECK(legendre_transform_riesz(s, 1.5) == doctest::Approx(2.0));
    CHECK(legendre_transform_riesz(s, 3.0) == doctest::Approx(6.0));
    CHECK(legendre_transform_riesz(s, 0.0) == 0.0);
    CHECK_THROWS_AS(legendre_transform_riesz(s, 3.5), TruncationError);
    CHECK_THROWS_AS(legendre_transform_riesz(s, -0.5), DomainError);

    const auto sq = unit_square(60);
    const auto disk = analytic::disk_spectrum(1.0, 60);
    for (const auto* spec : {&sq, &disk}) {
        double prev_slope = -1.0;
        for (int i = 1; i < 100; ++i) {
            const double p = 0.37 * i;
            const double exact = legendre_transform_riesz(*spec, p);
            CHECK(std::abs(brute_force_legendre(*spec, p) - exact) <= 1e-9 * std::max(1.0, exact));
            const double slope = (legendre_transform_riesz(*spec, p + 0.01) - exact) / 0.01;
            CHECK(slope >= prev_slope - 1e-9);
            prev_slope = slope;
        }
    }
}

TEST_CASE("Laptev bound and the Chiti substitution") {
    const auto sq = unit_square(10);
    const auto at_l1 = check_laptev(sq, 2.0, sq.lambda(1), kAnalytic);
    CHECK(at_l1.lhs == 0.0);
    CHECK(at_l1.pass);
    // the unit-square ground state 2 sin(pi x) sin(pi y) has sup norm 2
    CHECK(check_laptev(sq, 2.0, 5 * kPi2, kAnalytic).verdict == Verdict::pass);
    CHECK_THROWS_AS(check_laptev(sq, 0.0, 5 * kPi2, kAnalytic), DomainError);

    for (const auto& row : oracle::kConstants) {
        const int d = row.d;
        for (const double l1 : {1.0, 19.7, 350.0}) {
            const double omega = row.C_2 * std::pow(l1, 0.25 * d);
            for (const double l : {1.5 * l1, 4.0 * l1}) {
                const double a = laptev_lhs(d, omega, l1, l);
                const double b = main_lhs(d, l1, l);
                CHECK(std::abs(a - b) <= 1e-9 * b);
            }
        }
    }
}

TEST_CASE("analytic spectra satisfy every bound") {
    std::vector<Spectrum> spectra;
    for (const auto& L : std::vector<std::vector<double>>{
             {1.0, 1.0}, {1.0, 0.3}, {1.0, 1.0, 1.0}, {2.0, 0.7, 1.1}, {1, 1, 1, 1},
             {1.3, 0.9, 1.0, 0.6}, {1, 1, 1, 1, 1}, {0.8, 1.2, 1.0, 0.9, 1.4}}) {
        spectra.push_back(analytic::box_spectrum(L, 201));
    }
    spectra.push_back(analytic::disk_spectrum(1.0, 201));
    spectra.push_back(analytic::disk_spectrum(2.0, 201));

    int checked = 0;
    for (const auto& s : spectra) {
        std::vector<BoundCheck> all;
        const double top = s.values.back();
        for (int i = 0; i <= 40; ++i) {
            const double lambda = std::min(top, top * i / 40.0);
            all.push_back(check_berezin_li_yau(s, *s.measure, lambda, kAnalytic));
            all.push_back(check_main(s, lambda, kAnalytic));
        }
        for (int k = 1; k <= 200; ++k) {
            all.push_back(check_li_yau(s, *s.measure, k, kAnalytic));
            all.push_back(check_main_legendre(s, k, kAnalytic));
            all.push_back(check_yang(s, k, kAnalytic));
            for (auto& c : check_ratio_bounds(s, k, kAnalytic)) all.push_back(c);
            for (auto& c : check_yang_corollaries(s, k, kAnalytic)) all.push_back(c);
        }
        for (const auto& c : all) {
            INFO(c.name << " d=" << s.d << " margin " << c.margin);
            CHECK(c.pass);
            ++checked;
        }
        // Yang implies the corollaries on every tested k
        for (int k = 1; k <= 200; ++k) {
            if (!check_yang(s, k, kAnalytic).pass) continue;
            for (const auto& c : check_yang_corollaries(s, k, kAnalytic)) CHECK(c.pass);
        }
    }
    CHECK(checked > 10'000);
}
