//---------------------------------------------------------------------------//
// Copyright the cylsolid contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cylsolid/analytic.hpp
//! \brief Closed-form solid angles for a point cosine source
//---------------------------------------------------------------------------//
#pragma once

#include <optional>
#include <string_view>

#include "geometry.hpp"

namespace cylsolid
{
//---------------------------------------------------------------------------//
enum class Method
{
    analytic,
    mc,
    quadrature,
    direct2d,
};

std::string_view to_string(Method m);

//---------------------------------------------------------------------------//
/*!
 * A solid angle normalized so the whole emission hemisphere is 1.
 *
 * Multiply by 2 pi (see \c to_steradians) for a conventional solid angle.
 * \c std_error is only set for Monte Carlo estimates.
 */
struct SolidAngleResult
{
    double value{0};
    Method method{Method::analytic};
    std::optional<double> std_error;
};

double to_steradians(double normalized);

//---------------------------------------------------------------------------//
/*!
 * Dimensionless parameters of the closed forms for one (l, r, d) triple.
 *
 * - m = 2rd / (l^2 + d^2 + r^2)
 * - n = 2rd / (d^2 + r^2)
 * - tan(beta / 2) = ((1 + n) / (1 - n))^(1/4)
 * - cos(gamma) = m
 * - phi_o = asin(r / d), the tangency azimuth, present only for d >= r
 *
 * The complements 1 - m and 1 - n are formed from differences of lengths so
 * they keep full relative precision as d approaches r.
 */
struct AuxParams
{
    double m{};
    double n{};
    double one_minus_m{};
    double one_minus_n{};
    double beta{};
    double gamma{};
    std::optional<double> phi_o;
};

AuxParams aux_params(double l, double r, double d);

//---------------------------------------------------------------------------//
// Disc
//---------------------------------------------------------------------------//
// Stable single-expression disc solid angle; defined for every valid disc
SolidAngleResult omega_circ(DiscGeometry const& g);

// Piecewise (m, n) disc forms; refuse d == r and d == 0
SolidAngleResult omega_circ_mn(DiscGeometry const& g);

// Piecewise (beta, gamma) disc forms; refuse d == r and d == 0
SolidAngleResult omega_circ_beta_gamma(DiscGeometry const& g);

// Plane aperture of the disc seen in the xz plane: omega = (1 - cos) / 2
double delta_aperture(DiscGeometry const& g);

//---------------------------------------------------------------------------//
// Cylinder
//---------------------------------------------------------------------------//
// Cylinder occupying 0 <= z <= l, source outside it (d > r)
SolidAngleResult omega_cyl0(double l, double r, double d);

// Same quantity through the (beta, gamma) recast; requires l > 0
SolidAngleResult omega_cyl0_beta_gamma(double l, double r, double d);

// Infinite-length limit of omega_cyl0: asin(r / d) / pi
SolidAngleResult omega_cyl0_asymptotic(double r, double d);

//---------------------------------------------------------------------------//
//! Which branch of the whole-detector dispatch applies
enum class Regime
{
    below_plane,  //!< l1 <= 0: detector behind the source plane
    enclosing,  //!< d < r, l2 <= 0 < l1: source inside the detector
    skew_half,  //!< d > r, l2 <= 0 < l1: one cylinder term
    disc_only,  //!< d <= r, l2 > 0: bottom disc only
    full_three_term,  //!< d > r, l2 > 0: two cylinder terms plus a disc
};

std::string_view to_string(Regime r);

// Dispatch branch for a validated geometry; throws DomainError where
// omega_total does
Regime classify(CylinderGeometry const& g);

// Solid angle of the whole detector
SolidAngleResult omega_total(CylinderGeometry const& g);

//---------------------------------------------------------------------------//
// Uniform cosine disc source facing a coaxial parallel detector disc
SolidAngleResult omega_spread(SpreadGeometry const& g);

//---------------------------------------------------------------------------//
}  // namespace cylsolid
