//---------------------------------------------------------------------------//
// Copyright the cylsolid contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file test_analytic.cpp
//---------------------------------------------------------------------------//
#include <array>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <doctest.h>

#include "cylsolid/analytic.hpp"
#include "cylsolid/errors.hpp"

using namespace cylsolid;
using Triple = std::array<double, 3>;
using doctest::Approx;
using std::numbers::pi;

namespace
{
// Reference values from tests/oracles/freeze_values.py (40-digit mpmath
// quadrature of the azimuthal hit-set integral)
constexpr double ref_disc_1_2_1 = 0.052786404500042060718;
constexpr double ref_disc_2_1_1 = 0.72360679774997896964;
constexpr double ref_disc_1_2_10 = 0.0091675205888010461161;
constexpr double ref_disc_1_05_3 = 0.095631957848405738391;
constexpr double ref_cyl0_1_1_2 = 0.073756867369108936835;
constexpr double ref_cyl0_10_1_15 = 0.2314019003325371145;
constexpr double ref_cyl0_001_1_3 = 2.3569628680438797088e-6;
constexpr double ref_total_1_2_6_1 = 0.13986865250482045408;
constexpr double ref_spread_1_2_2 = 0.46887112585072517382;
constexpr double ref_spread_2_1_05 = 0.23120404660201739547;

double near(double a, double b)
{
    return std::fabs(a - b);
}

double circ(double r, double d, double l)
{
    return omega_circ({r, d, l}).value;
}

double cyl0(double l, double r, double d)
{
    return omega_cyl0(l, r, d).value;
}
}  // namespace

//---------------------------------------------------------------------------//
TEST_CASE("auxiliary parameters")
{
    AuxParams const a = aux_params(1, 1, 2);
    CHECK(a.m == Approx(2.0 / 3.0).epsilon(1e-15));
    CHECK(a.n == Approx(4.0 / 5.0).epsilon(1e-15));
    REQUIRE(a.phi_o);
    CHECK(*a.phi_o == Approx(pi / 6).epsilon(1e-15));
    CHECK(a.beta == Approx(pi / 2 + *a.phi_o).epsilon(1e-14));
    CHECK(std::cos(a.gamma) == Approx(a.m).epsilon(1e-14));

    AuxParams const flat = aux_params(0, 1, 3);
    CHECK(flat.m == flat.n);

    AuxParams const rim = aux_params(2, 1, 1);
    CHECK(rim.n == 1);
    CHECK(rim.one_minus_n == 0);
    CHECK(rim.m == Approx(2.0 / (4 + 2)).epsilon(1e-15));
    CHECK(rim.beta == Approx(pi).epsilon(1e-15));

    // d < r: no tangency azimuth
    CHECK_FALSE(aux_params(1, 2, 1).phi_o);

    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.01, 5);
    for (int i = 0; i < 1000; ++i)
    {
        double const l = u(rng), r = u(rng), d = u(rng);
        AuxParams const p = aux_params(l, r, d);
        CHECK(p.m >= 0);
        CHECK(p.m <= p.n);
        CHECK(p.n <= 1);
        CHECK(p.beta >= pi / 2);
        CHECK(p.beta <= pi);
        CHECK(p.gamma > 0);
        CHECK(p.gamma <= pi / 2);
        double const t = std::tan(p.beta / 2);
        CHECK(t * t * t * t == Approx((1 + p.n) / p.one_minus_n).epsilon(1e-9));
        if (d > r)
            CHECK(near(p.beta, pi / 2 + *p.phi_o) < 1e-12);
    }
    CHECK_THROWS_AS(aux_params(1, 0, 1), DomainError);
    CHECK_THROWS_AS(aux_params(-1, 1, 1), DomainError);
}

//---------------------------------------------------------------------------//
TEST_CASE("disc closed form")
{
    CHECK(circ(1, 0, 1) == Approx(0.5).epsilon(1e-15));
    CHECK(near(circ(1, 2, 1), ref_disc_1_2_1) < 1e-15);
    CHECK(near(circ(2, 1, 1), ref_disc_2_1_1) < 1e-15);
    CHECK(near(circ(1, 2, 10), ref_disc_1_2_10) < 1e-15);
    CHECK(near(circ(1, 0.5, 3), ref_disc_1_05_3) < 1e-15);

    SUBCASE("source plane limits")
    {
        CHECK(circ(1, 2, 0) == 0);
        CHECK(circ(1, 0.5, 0) == 1);
        CHECK(circ(1, 1, 0) == 0.5);
        CHECK(circ(1, 2, 1e-12) < 1e-20);
        CHECK(circ(1, 0.5, 1e-12) == Approx(1).epsilon(1e-15));
    }
    SUBCASE("on the rim")
    {
        double const m1 = 2.0 / 3.0;
        CHECK(circ(1, 1, 1) == Approx(0.5 * (1 - std::sqrt((1 - m1) / (1 + m1)))).epsilon(1e-15));
    }
    SUBCASE("on axis reduces to r^2/(r^2+l^2)... halved complement")
    {
        // 1/2 (1 - (l^2 - r^2)/(l^2 + r^2)) = r^2 / (l^2 + r^2)
        CHECK(circ(3, 0, 4) == Approx(9.0 / 25.0).epsilon(1e-15));
    }
}

TEST_CASE("disc alternate forms")
{
    for (auto [r, d, l] : std::vector<Triple>{{1.0, 2.0, 1.0}, {2.0, 1.0, 1.0}, {1.0, 2.0, 10.0}})
    {
        CAPTURE(r);
        CAPTURE(d);
        CAPTURE(l);
        double const ref = circ(r, d, l);
        CHECK(near(omega_circ_mn({r, d, l}).value, ref) < 1e-12);
        CHECK(near(omega_circ_beta_gamma({r, d, l}).value, ref) < 1e-12);
        CHECK(near(0.5 * (1 - std::cos(delta_aperture({r, d, l}))), ref) < 1e-12);
    }

    CHECK_THROWS_AS(omega_circ_mn({1, 1, 1}), DomainError);
    CHECK_THROWS_AS(omega_circ_beta_gamma({1, 1, 1}), DomainError);
    CHECK_THROWS_AS(omega_circ_mn({1, 0, 1}), DomainError);
    CHECK_THROWS_AS(omega_circ_mn({1, 2, 0}), DomainError);
    CHECK_THROWS_AS(delta_aperture({1, 2, 0}), DomainError);

    SUBCASE("both piecewise branches approach the rim value")
    {
        double const l = 1;
        double const m1 = 2 / (l * l + 2);
        double const rim = 0.5 * (1 - std::sqrt((1 - m1) / (1 + m1)));
        for (double eps : {1e-4, 1e-6})
        {
            CHECK(near(omega_circ_mn({1, 1 + eps, l}).value, rim) < 10 * eps);
            CHECK(near(omega_circ_mn({1, 1 - eps, l}).value, rim) < 10 * eps);
            CHECK(near(omega_circ_beta_gamma({1, 1 + eps, l}).value, rim) < 10 * eps);
            CHECK(near(omega_circ_beta_gamma({1, 1 - eps, l}).value, rim) < 10 * eps);
        }
    }
}

TEST_CASE("aperture angle")
{
    CHECK(delta_aperture({1, 0, 1}) == Approx(pi / 2).epsilon(1e-15));
    CHECK(delta_aperture({1, 2, 1}) == Approx(std::atan(3.0) - pi / 4).epsilon(1e-15));
    CHECK(delta_aperture({2, 1, 1}) == Approx(std::atan(3.0) + pi / 4).epsilon(1e-15));
}

//---------------------------------------------------------------------------//
TEST_CASE("cylinder closed form")
{
    CHECK(cyl0(0, 1, 2) == 0);
    CHECK(near(cyl0(1e6, 1, 2), 1.0 / 6.0) < 1e-6);
    CHECK(near(cyl0(5, 1, 1 + 1e-9), 0.5) < 1e-4);

    CHECK(near(cyl0(1, 1, 2), ref_cyl0_1_1_2) < 1e-14);
    CHECK(near(cyl0(10, 1, 1.5), ref_cyl0_10_1_15) < 1e-14);
    CHECK(near(cyl0(0.01, 1, 3), ref_cyl0_001_1_3) < 1e-14);

    CHECK_THROWS_AS(omega_cyl0(1, 1, 1), DomainError);
    CHECK_THROWS_AS(omega_cyl0(1, 2, 1), DomainError);
    CHECK_THROWS_AS(omega_cyl0(-1, 1, 2), DomainError);

    SUBCASE("(beta, gamma) recast")
    {
        for (auto [l, r, d] : std::vector<Triple>{{1.0, 1.0, 2.0}, {10.0, 1.0, 1.5}, {0.01, 1.0, 3.0}})
        {
            CAPTURE(l);
            CHECK(near(omega_cyl0_beta_gamma(l, r, d).value, cyl0(l, r, d)) < 1e-12);
        }
        CHECK(omega_cyl0_beta_gamma(0.01, 1, 3).value < 1e-5);
        CHECK_THROWS_AS(omega_cyl0_beta_gamma(0, 1, 3), DomainError);
        CHECK_THROWS_AS(omega_cyl0_beta_gamma(1, 1, 1), DomainError);
    }
}

TEST_CASE("infinite cylinder limit")
{
    CHECK(omega_cyl0_asymptotic(1, 2).value == Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(omega_cyl0_asymptotic(1, std::sqrt(2.0)).value == Approx(0.25).epsilon(1e-15));
    double const far = omega_cyl0_asymptotic(1, 100).value;
    CHECK(far == Approx(0.0031836).epsilon(1e-4));
    CHECK(near(cyl0(1e6, 1, 100), far) < 1e-9);
    CHECK_THROWS_AS(omega_cyl0_asymptotic(1, 1), DomainError);

    // Equivalent arctangent expression of the same limit
    for (double d : {1.001, 1.5, 2.0, 10.0, 1000.0})
    {
        double const n = 2 * d / (d * d + 1);
        double const alt = 0.5 - 2 / pi * std::atan(std::pow((d - 1) * (d - 1) / (d * d + 1) / (1 + n), 0.25));
        CHECK(near(alt, omega_cyl0_asymptotic(1, d).value) < 1e-14);
    }
}

//---------------------------------------------------------------------------//
TEST_CASE("whole detector dispatch")
{
    CHECK(omega_total({1, 5, -1, -6}).value == 0);
    CHECK(classify({1, 5, -1, -6}) == Regime::below_plane);
    CHECK(omega_total({1, 0.5, 3, -2}).value == 1);
    CHECK(classify({1, 0.5, 3, -2}) == Regime::enclosing);

    CHECK(classify({1, 2, 6, 1}) == Regime::full_three_term);
    CHECK(near(omega_total({1, 2, 6, 1}).value,
               cyl0(6, 1, 2) - cyl0(1, 1, 2) + circ(1, 2, 1))
          < 1e-15);
    CHECK(near(omega_total({1, 2, 6, 1}).value, ref_total_1_2_6_1) < 1e-14);

    CHECK(classify({1, 2, 6, -1}) == Regime::skew_half);
    CHECK(omega_total({1, 2, 6, -1}).value == cyl0(6, 1, 2));
    CHECK(classify({1, 0.5, 6, 1}) == Regime::disc_only);
    CHECK(omega_total({1, 0.5, 6, 1}).value == circ(1, 0.5, 1));

    SUBCASE("boundary planes")
    {
        CHECK(omega_total({1, 0.5, 0, -2}).value == 0);
        CHECK(omega_total({1, 2, 0, -2}).value == 0);
        CHECK(omega_total({1, 2, 4, 0}).value == cyl0(4, 1, 2));
        CHECK(omega_total({1, 0.5, 4, 0}).value == 1);
    }
    SUBCASE("source on the extended wall")
    {
        CHECK_THROWS_AS(omega_total({1, 1, 4, -1}), DomainError);
        CHECK_THROWS_AS(omega_total({1, 1, 4, 0}), DomainError);
        CHECK(omega_total({1, 1, -1, -4}).value == 0);
        CHECK(omega_total({1, 1, 4, 1}).value == circ(1, 1, 1));
        // Matches both one-sided limits
        CHECK(near(omega_total({1, 1 + 1e-9, 4, 1}).value, circ(1, 1, 1)) < 1e-6);
        CHECK(near(omega_total({1, 1 - 1e-9, 4, 1}).value, circ(1, 1, 1)) < 1e-6);
    }
    CHECK_THROWS_AS(omega_total({1, 2, 1, 1}), InvalidGeometry);
}

//---------------------------------------------------------------------------//
TEST_CASE("spread source")
{
    CHECK(omega_spread({1e-9, 1, 1}).value == Approx(0.5).epsilon(1e-12));
    CHECK(omega_spread({1, 1, 1e-4}).value > 0.999);
    CHECK(near(omega_spread({1, 2, 2}).value, ref_spread_1_2_2) < 1e-15);
    CHECK(near(omega_spread({2, 1, 0.5}).value, ref_spread_2_1_05) < 1e-15);

    SUBCASE("tangent half-angle form")
    {
        for (auto [rs, rd, l] : std::vector<Triple>{{1.0, 2.0, 2.0}, {2.0, 1.0, 0.5}, {0.3, 3.0, 7.0}})
        {
            double const ms = 2 * rd * rs / (l * l + rd * rd + rs * rs);
            double const gamma_s = std::asin(ms);
            CHECK(near(omega_spread({rs, rd, l}).value, rd / rs * std::tan(gamma_s / 2)) < 1e-14);
        }
    }
    SUBCASE("halved variant violates both physical limits")
    {
        auto halved = [](double rs, double rd, double l) {
            double const ms = 2 * rd * rs / (l * l + rd * rd + rs * rs);
            return rd / rs / (2 * ms) * (1 - std::sqrt(1 - ms * ms));
        };
        CHECK(near(halved(1e-3, 1, 1), 0.5) > 0.2);
        CHECK(halved(1, 1, 1e-4) < 0.51);
    }
    SUBCASE("point-source limit is second order")
    {
        for (double l : {0.3, 1.0, 4.0})
        {
            double const eps = 1e-3;
            CHECK(near(omega_spread({eps, 1, l}).value, circ(1, 0, l)) < 1e-5);
        }
    }
}

//---------------------------------------------------------------------------//
TEST_CASE("closed forms stay in [0, 1]")
{
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(0, 1);
    auto length = [&] { return std::exp(std::log(1e-3) + u(rng) * std::log(1e6)); };
    int bad = 0;
    for (int i = 0; i < 100000; ++i)
    {
        double const r = length();
        double const d = (i % 7 == 0) ? 0.0 : length();
        double const l = length();
        auto out = [](double v) { return !(v >= 0 && v <= 1); };
        bad += out(circ(r, d, l));
        bad += out(omega_spread({length(), r, l}).value);
        if (d > r)
            bad += out(cyl0(l, r, d));
        double const l2 = (u(rng) - 0.5) * length();
        if (d != r)
            bad += out(omega_total({r, d, l2 + length(), l2}).value);
    }
    CHECK(bad == 0);
}

TEST_CASE("closed forms agree with each other")
{
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(0, 1);
    double worst = 0;
    for (int i = 0; i < 10000; ++i)
    {
        double const r = 0.5 + 1.5 * u(rng);
        double const d = r * std::exp(std::log(0.1) + u(rng) * std::log(100.0));
        double const l = r * std::exp(std::log(0.01) + u(rng) * std::log(1e4));
        if (std::fabs(d / r - 1) < 1e-3)
            continue;
        DiscGeometry const g{r, d, l};
        double const ref = omega_circ(g).value;
        worst = std::max(worst, near(omega_circ_mn(g).value, ref));
        worst = std::max(worst, near(omega_circ_beta_gamma(g).value, ref));
        worst = std::max(worst, near(0.5 * (1 - std::cos(delta_aperture(g))), ref));
        if (d > r)
            worst = std::max(worst, near(omega_cyl0_beta_gamma(l, r, d).value, cyl0(l, r, d)));
    }
    CHECK(worst <= 1e-11);
}

TEST_CASE("monotonicity")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 2000; ++i)
    {
        double const r = 0.5 + u(rng);
        double const d = 3 * u(rng);
        double const l = 0.05 + 5 * u(rng);
        double const step = 1.05;
        // From outside the rim the disc value starts at 0 for l = 0
        if (d <= r)
            CHECK(circ(r, d, l * step) < circ(r, d, l));
        CHECK(circ(r, d * step + 0.01, l) < circ(r, d, l));
        CHECK(circ(r * step, d, l) > circ(r, d, l));
        double const dd = r * (1.1 + 3 * u(rng));
        CHECK(cyl0(l * step, r, dd) > cyl0(l, r, dd));
        CHECK(cyl0(l, r, dd * step) < cyl0(l, r, dd));
    }
}

TEST_CASE("disc is continuous across the rim for l > 0")
{
    for (double l : {0.1, 1.0, 5.0})
    {
        double const m1 = 2 / (l * l + 2);
        double const rim = 0.5 * (1 - std::sqrt((1 - m1) / (1 + m1)));
        for (double eps : {1e-4, 1e-5, 1e-6, 1e-7, 1e-8})
        {
            double const inside = circ(1, 1 - eps, l);
            double const outside = circ(1, 1 + eps, l);
            CHECK(near(inside, outside) <= 20 * eps / l);
            CHECK(near(inside, rim) <= 10 * eps / l);
            CHECK(near(outside, rim) <= 10 * eps / l);
        }
    }
}

TEST_CASE("long cylinder approaches the limit from below")
{
    for (double d : {1.2, 2.0, 5.0})
    {
        double const lim = omega_cyl0_asymptotic(1, d).value;
        double const v = cyl0(1e4 * d, 1, d);
        CHECK(v <= lim);
        CHECK(lim - v < 1e-6);
    }
}

TEST_CASE("three-term additivity")
{
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 1000; ++i)
    {
        double const r = 0.5 + u(rng);
        double const d = r * (1.01 + 4 * u(rng));
        double const l2 = 0.01 + 5 * u(rng);
        double const l1 = l2 + 0.01 + 5 * u(rng);
        double const wall = cyl0(l1, r, d) - cyl0(l2, r, d);
        CHECK(wall >= 0);
        CHECK(near(omega_total({r, d, l1, l2}).value, wall + circ(r, d, l2)) < 1e-15);
    }
}

TEST_CASE("solid angles are scale invariant")
{
    std::mt19937_64 rng(9);
    std::uniform_real_distribution<double> u(0, 1);
    auto rel = [](double a, double b) { return b == 0 ? std::fabs(a) : std::fabs(a / b - 1); };
    double worst = 0;
    for (int i = 0; i < 1000; ++i)
    {
        double const r = 0.5 + u(rng);
        double const d = 3 * u(rng);
        double const l = 0.05 + 5 * u(rng);
        double const dd = r * (1.1 + 3 * u(rng));
        double const l2 = -2 + 4 * u(rng);
        double const l1 = l2 + 0.1 + 3 * u(rng);
        for (double s : {1e-3, 1e3})
        {
            worst = std::max(worst, rel(circ(s * r, s * d, s * l), circ(r, d, l)));
            worst = std::max(worst, rel(cyl0(s * l, s * r, s * dd), cyl0(l, r, dd)));
            worst = std::max(worst, rel(omega_total({s * r, s * dd, s * l1, s * l2}).value,
                                        omega_total({r, dd, l1, l2}).value));
            worst = std::max(worst, rel(omega_spread({s * d + s, s * r, s * l}).value,
                                        omega_spread({d + 1, r, l}).value));
        }
    }
    CHECK(worst <= 1e-12);
}

TEST_CASE("steradian conversion")
{
    CHECK(to_steradians(1) == Approx(2 * pi));
    CHECK(to_string(Regime::full_three_term) == "full-three-term");
    CHECK(to_string(Method::direct2d) == "direct2d");
}
