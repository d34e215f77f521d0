//---------------------------------------------------------------------------//
// Copyright the cylsolid contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file analytic.cpp
//---------------------------------------------------------------------------//
#include "cylsolid/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "cylsolid/errors.hpp"

namespace cylsolid
{
namespace
{
using std::numbers::pi;

double clamp_unit(double v)
{
    return std::clamp(v, 0.0, 1.0);
}

SolidAngleResult analytic(double v)
{
    return {clamp_unit(v), Method::analytic, std::nullopt};
}

void require_finite_triple(double l, double r, double d)
{
    if (!std::isfinite(l) || !std::isfinite(r) || !std::isfinite(d))
    {
        throw DomainError("non-finite length");
    }
    if (!(r > 0))
    {
        throw DomainError("r must be > 0");
    }
    if (!(d >= 0))
    {
        throw DomainError("d must be >= 0");
    }
    if (!(l >= 0))
    {
        throw DomainError("l must be >= 0");
    }
}

void require_skew(double r, double d)
{
    if (!(d > r))
    {
        throw DomainError("cylinder form requires the source outside the "
                          "cylinder's extension (d > r)");
    }
}

// Shared guard for the piecewise disc forms, singular at n = 1 and n = 0
void require_piecewise_disc(DiscGeometry const& g)
{
    validate(g);
    if (g.d == g.r)
    {
        throw DomainError("piecewise disc form is singular at d == r");
    }
    if (!(g.d > 0))
    {
        throw DomainError("piecewise disc form requires d > 0");
    }
    if (!(g.l > 0))
    {
        throw DomainError("piecewise disc form requires l > 0");
    }
}

// sqrt(1 - x^2) from the precomputed complement
double sqrt_one_minus_sq(double x, double one_minus_x)
{
    return std::sqrt(one_minus_x * (1 + x));
}
}  // namespace

//---------------------------------------------------------------------------//
std::string_view to_string(Method m)
{
    switch (m)
    {
        case Method::analytic:
            return "analytic";
        case Method::mc:
            return "mc";
        case Method::quadrature:
            return "quadrature";
        case Method::direct2d:
            return "direct2d";
    }
    return "unknown";
}

std::string_view to_string(Regime r)
{
    switch (r)
    {
        case Regime::below_plane:
            return "below-plane";
        case Regime::enclosing:
            return "enclosing";
        case Regime::skew_half:
            return "skew-half";
        case Regime::disc_only:
            return "disc-only";
        case Regime::full_three_term:
            return "full-three-term";
    }
    return "unknown";
}

double to_steradians(double normalized)
{
    return 2 * pi * normalized;
}

//---------------------------------------------------------------------------//
AuxParams aux_params(double l, double r, double d)
{
    require_finite_triple(l, r, d);

    double const l2 = l * l;
    double const sum_dr = d * d + r * r;
    double const sum_ldr = l2 + sum_dr;
    double const diff2 = (d - r) * (d - r);

    AuxParams a;
    a.m = 2 * r * d / sum_ldr;
    a.n = 2 * r * d / sum_dr;
    a.one_minus_m = (l2 + diff2) / sum_ldr;
    a.one_minus_n = diff2 / sum_dr;
    // tan(beta/2) = ((1+n)/(1-n))^(1/4) is +inf at n == 1, giving beta = pi
    a.beta = 2 * std::atan(std::pow((1 + a.n) / a.one_minus_n, 0.25));
    a.gamma = std::atan2(sqrt_one_minus_sq(a.m, a.one_minus_m), a.m);
    if (d >= r)
    {
        a.phi_o = std::asin(r / d);
    }
    return a;
}

//---------------------------------------------------------------------------//
/*!
 * Disc solid angle: (1 - (d^2 + l^2 - r^2) / sqrt(D)) / 2.
 *
 * The discriminant D = (r^2 + d^2 + l^2)^2 - 4 r^2 d^2 is evaluated as
 * (l^2 + (d - r)^2) (l^2 + (d + r)^2). When the numerator is nonnegative the
 * difference 1 - num / sqrt(D) is rewritten using D - num^2 = 4 r^2 l^2 so
 * small solid angles keep relative precision.
 *
 * At l == 0 the value is the limit from above: 0 for d > r, 1 for d < r and
 * 1/2 on the rim.
 */
SolidAngleResult omega_circ(DiscGeometry const& g)
{
    validate(g);
    double const l = g.l;
    double const r = g.r;
    double const d = g.d;

    if (l == 0)
    {
        if (d > r)
            return analytic(0);
        if (d < r)
            return analytic(1);
        return analytic(0.5);
    }

    double const l2 = l * l;
    double const num = l2 + (d - r) * (d + r);
    double const root
        = std::sqrt((l2 + (d - r) * (d - r)) * (l2 + (d + r) * (d + r)));
    if (num >= 0)
    {
        return analytic(2 * r * r * l2 / (root * (root + num)));
    }
    return analytic(0.5 * (1 - num / root));
}

//---------------------------------------------------------------------------//
/*!
 * Disc solid angle through m and n:
 *
 *   d > r: (1 - (1 - m/n (1 - sqrt(1-n^2))) / sqrt(1-m^2)) / 2
 *   d < r: (1 - (1 - m/n (1 + sqrt(1-n^2))) / sqrt(1-m^2)) / 2
 */
SolidAngleResult omega_circ_mn(DiscGeometry const& g)
{
    require_piecewise_disc(g);
    AuxParams const a = aux_params(g.l, g.r, g.d);
    double const root_n = sqrt_one_minus_sq(a.n, a.one_minus_n);
    double const root_m = sqrt_one_minus_sq(a.m, a.one_minus_m);
    double const sign = g.d > g.r ? -1.0 : 1.0;
    double const coef = 1 - a.m / a.n * (1 + sign * root_n);
    return analytic(0.5 * (1 - coef / root_m));
}

//---------------------------------------------------------------------------//
SolidAngleResult omega_circ_beta_gamma(DiscGeometry const& g)
{
    require_piecewise_disc(g);
    AuxParams const a = aux_params(g.l, g.r, g.d);
    double const cb = std::cos(a.beta);
    double const cg = std::cos(a.gamma);
    double const sg = std::sin(a.gamma);
    if (g.d > g.r)
    {
        return analytic(0.5 * (1 - (1 + cb * cg) / sg));
    }
    return analytic(0.5 * (1 - (cb + cg) / (sg * cb)));
}

//---------------------------------------------------------------------------//
double delta_aperture(DiscGeometry const& g)
{
    validate(g);
    if (!(g.l > 0))
    {
        throw DomainError("aperture angle requires l > 0");
    }
    return std::atan((g.d + g.r) / g.l) - std::atan((g.d - g.r) / g.l);
}

//---------------------------------------------------------------------------//
/*!
 * Solid angle of a cylinder spanning 0 <= z <= l seen from outside (d > r):
 *
 *   pi * omega = atan(q) - c atan(sqrt((1+m)/(1-m)) / q),
 *   q = ((1+n)/(1-n))^(1/4),  c = (1 - m/n (1 - sqrt(1-n^2))) / sqrt(1-m^2)
 */
SolidAngleResult omega_cyl0(double l, double r, double d)
{
    require_finite_triple(l, r, d);
    require_skew(r, d);
    if (l == 0)
    {
        return analytic(0);
    }
    AuxParams const a = aux_params(l, r, d);
    double const root_n = sqrt_one_minus_sq(a.n, a.one_minus_n);
    double const root_m = sqrt_one_minus_sq(a.m, a.one_minus_m);
    double const q = std::pow((1 + a.n) / a.one_minus_n, 0.25);
    double const inner = std::sqrt((1 + a.m) / a.one_minus_m) / q;

    // atan(q) - c atan(inner) = atan(q) - atan(inner) + (1 - c) atan(inner)
    // with both pieces expanded in n - m, which vanishes as l^2 for short
    // cylinders
    double const n_minus_m = a.n * l * l / (l * l + d * d + r * r);
    double const x = (1 + a.n) / a.one_minus_n;
    double const y = (1 + a.m) / a.one_minus_m;
    double const x_minus_y = 2 * n_minus_m / (a.one_minus_n * a.one_minus_m);
    double const q_minus_inner = x_minus_y / ((std::sqrt(x) + std::sqrt(y)) * q);
    double const atan_diff = std::atan(q_minus_inner / (1 + q * inner));

    double const cross = n_minus_m * (a.n + a.m) / (a.n * root_m + a.m * root_n);
    double const one_minus_coef = a.m * (n_minus_m + cross)
                                  / ((1 + root_n) * (1 + root_m) * root_m);
    return analytic((atan_diff + one_minus_coef * std::atan(inner)) / pi);
}

//---------------------------------------------------------------------------//
SolidAngleResult omega_cyl0_beta_gamma(double l, double r, double d)
{
    require_finite_triple(l, r, d);
    require_skew(r, d);
    if (!(l > 0))
    {
        throw DomainError("(beta, gamma) cylinder form requires l > 0");
    }
    AuxParams const a = aux_params(l, r, d);
    double const cb = std::cos(a.beta);
    double const cg = std::cos(a.gamma);
    double const sg = std::sin(a.gamma);
    double const cot_half_gamma = 1 / std::tan(a.gamma / 2);
    double const cot_half_beta = 1 / std::tan(a.beta / 2);
    double const coef = (1 + cb * cg) / sg;
    return analytic(
        (a.beta / 2 - coef * std::atan(cot_half_gamma * cot_half_beta)) / pi);
}

//---------------------------------------------------------------------------//
SolidAngleResult omega_cyl0_asymptotic(double r, double d)
{
    require_finite_triple(0, r, d);
    require_skew(r, d);
    return analytic(std::asin(r / d) / pi);
}

//---------------------------------------------------------------------------//
/*!
 * Branch selection for the whole detector.
 *
 * Boundary planes are folded into the adjacent open region: l1 == 0 behaves
 * as l1 < 0 and l2 == 0 as l2 < 0. A source on the extended wall (d == r)
 * is only accepted when the detector lies strictly above the source plane.
 */
Regime classify(CylinderGeometry const& g)
{
    validate(g);
    if (g.l1 <= 0)
    {
        return Regime::below_plane;
    }
    if (g.l2 <= 0)
    {
        if (g.d < g.r)
            return Regime::enclosing;
        if (g.d > g.r)
            return Regime::skew_half;
        throw DomainError("source lies on the detector wall (d == r, "
                          "l2 <= 0 < l1)");
    }
    return g.d > g.r ? Regime::full_three_term : Regime::disc_only;
}

SolidAngleResult omega_total(CylinderGeometry const& g)
{
    switch (classify(g))
    {
        case Regime::below_plane:
            return analytic(0);
        case Regime::enclosing:
            return analytic(1);
        case Regime::skew_half:
            return omega_cyl0(g.l1, g.r, g.d);
        case Regime::disc_only:
            return omega_circ({g.r, g.d, g.l2});
        case Regime::full_three_term: {
            double const wall = omega_cyl0(g.l1, g.r, g.d).value
                                - omega_cyl0(g.l2, g.r, g.d).value;
            double const disc = omega_circ({g.r, g.d, g.l2}).value;
            return analytic(std::max(wall, 0.0) + disc);
        }
    }
    return analytic(0);
}

//---------------------------------------------------------------------------//
/*!
 * Coaxial spread source:
 *
 *   omega = (S - sqrt(S^2 - 4 rs^2 rd^2)) / (2 rs^2),  S = l^2 + rs^2 + rd^2
 *
 * evaluated as 2 rd^2 / (S + sqrt(...)) to avoid cancellation. This is
 * (rd / rs) tan(gamma_s / 2) with sin(gamma_s) = 2 rs rd / S.
 */
SolidAngleResult omega_spread(SpreadGeometry const& g)
{
    validate(g);
    double const l2 = g.l * g.l;
    double const sum = l2 + g.r_s * g.r_s + g.r_d * g.r_d;
    double const diff = g.r_s - g.r_d;
    double const plus = g.r_s + g.r_d;
    double const root = std::sqrt((l2 + diff * diff) * (l2 + plus * plus));
    return analytic(2 * g.r_d * g.r_d / (sum + root));
}

//---------------------------------------------------------------------------//
}  // namespace cylsolid
