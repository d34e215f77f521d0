//---------------------------------------------------------------------------//
// Copyright the cylsolid contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cylsolid/oracle.hpp
//! \brief Independent numerical estimators of the closed-form solid angles
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <optional>

#include "analytic.hpp"
#include "geometry.hpp"
#include "quadrature.hpp"

namespace cylsolid
{
//---------------------------------------------------------------------------//
/*!
 * Monte Carlo settings.
 *
 * Samples are split into \c chunks contiguous blocks, each driven by its own
 * generator seeded from (seed, chunk index). Results depend only on
 * (samples, seed, chunks); \c threads only changes wall time (0 picks the
 * hardware concurrency).
 */
struct McConfig
{
    std::uint64_t samples{1'000'000};
    std::uint64_t seed{0x5eed};
    std::uint32_t chunks{64};
    std::uint32_t threads{0};
};

void validate(McConfig const& cfg);

//---------------------------------------------------------------------------//
// Cosine-law direction from two uniforms: theta = asin(sqrt(u1)),
// phi = 2 pi u2
Direction sample_cosine_direction(double u1, double u2);

//! Raw Monte Carlo tally
struct McTally
{
    std::uint64_t hits{0};
    std::uint64_t samples{0};
};

McTally mc_tally(CylinderGeometry const& g, McConfig const& cfg);
McTally mc_tally(DiscGeometry const& g, McConfig const& cfg);
McTally mc_tally_spread(SpreadGeometry const& g, McConfig const& cfg);

// Hit fraction with binomial standard error
SolidAngleResult to_result(McTally const& tally);

SolidAngleResult mc_omega(CylinderGeometry const& g, McConfig const& cfg);
SolidAngleResult mc_omega(DiscGeometry const& g, McConfig const& cfg);
SolidAngleResult mc_omega_spread(SpreadGeometry const& g, McConfig const& cfg);

//---------------------------------------------------------------------------//
// Azimuthal quadrature
//---------------------------------------------------------------------------//
enum class Sign
{
    plus,
    minus,
};

// Horizontal distance to the near (minus) or far (plus) wall along azimuth phi
double rho_pm(double phi, double r, double d, Sign sign);

enum class AzimuthalTarget
{
    cyl0,  //!< cylinder over 0 <= z <= l, d > r
    circ_dgr,  //!< disc, d > r
    circ_rgd,  //!< disc, d < r
};

/*!
 * Raw azimuthal integrals of l^2 / (l^2 + rho^2).
 *
 * A-(phi_o) and A+(phi_o) run over [0, phi_o] with the near and far wall
 * distances; A+(pi) runs over [0, pi] with the far wall when d < r. Only the
 * integrals needed by the target are filled.
 */
struct AzimuthalIntegrals
{
    std::optional<double> a_minus_phi_o;
    std::optional<double> a_plus_phi_o;
    std::optional<double> a_plus_pi;
};

AzimuthalIntegrals azimuthal_integrals(AzimuthalTarget target,
                                       double l,
                                       double r,
                                       double d,
                                       QuadConfig const& cfg);

// Assemble a solid angle from the raw integrals of the given target
double assemble(AzimuthalTarget target, AzimuthalIntegrals const& a);

SolidAngleResult quad_azimuthal(AzimuthalTarget target,
                                double l,
                                double r,
                                double d,
                                QuadConfig const& cfg);

//---------------------------------------------------------------------------//
// Direct integration of (sin^2 theta_max - sin^2 theta_min) over azimuth,
// with the polar limits found by bisection on the hit predicates
SolidAngleResult direct_2d_omega(CylinderGeometry const& g,
                                 QuadConfig const& cfg);
SolidAngleResult direct_2d_omega(DiscGeometry const& g, QuadConfig const& cfg);

// Source-disc average of omega_circ by radial quadrature
SolidAngleResult quad_spread(SpreadGeometry const& g, QuadConfig const& cfg);

//---------------------------------------------------------------------------//
}  // namespace cylsolid
