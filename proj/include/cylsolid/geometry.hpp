//---------------------------------------------------------------------------//
// Copyright the cylsolid contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cylsolid/geometry.hpp
//! \brief Source/detector configurations and ray hit predicates
//---------------------------------------------------------------------------//
#pragma once

#include <array>

namespace cylsolid
{
//---------------------------------------------------------------------------//
/*!
 * Coordinate frame shared by every configuration.
 *
 * The point cosine source sits at the origin and emits into z >= 0 about +z.
 * Detector axes are parallel to z and lie in the xz half-plane at x = d >= 0.
 * All lengths are unit-free: only ratios enter any solid angle.
 */

//! Right circular cylinder spanning l2 <= z <= l1 with axis at (d, 0)
struct CylinderGeometry
{
    double r{};
    double d{};
    double l1{};
    double l2{};

    double length() const { return l1 - l2; }
};

//! Disc of radius r in the plane z = l, centered on (d, 0, l)
struct DiscGeometry
{
    double r{};
    double d{};
    double l{};
};

//! Uniform cosine source disc and a coaxial detector disc a distance l above
struct SpreadGeometry
{
    double r_s{};
    double r_d{};
    double l{};
};

//---------------------------------------------------------------------------//
/*!
 * Unit emission direction in the upper hemisphere.
 *
 * Construct from polar/azimuthal angles with \c from_angles; the raw
 * components are kept so the hit predicates never recompute trig functions.
 */
struct Direction
{
    double x{0};
    double y{0};
    double z{1};

    static Direction from_angles(double theta, double phi);

    std::array<double, 3> as_array() const { return {x, y, z}; }
};

//---------------------------------------------------------------------------//
// Validation: throw InvalidGeometry naming the failing field, else return
// the argument unchanged.
CylinderGeometry const& validate(CylinderGeometry const& g);
DiscGeometry const& validate(DiscGeometry const& g);
SpreadGeometry const& validate(SpreadGeometry const& g);

// Whether the ray {t * dir, t > 0} touches the closed solid cylinder
bool ray_hits_solid_cylinder(Direction const& dir, CylinderGeometry const& g);

// Whether the ray {t * dir, t > 0} crosses the closed disc
bool ray_hits_disc(Direction const& dir, DiscGeometry const& g);

//---------------------------------------------------------------------------//
}  // namespace cylsolid
