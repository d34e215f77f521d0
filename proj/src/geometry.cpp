//---------------------------------------------------------------------------//
// Copyright the cylsolid contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file geometry.cpp
//---------------------------------------------------------------------------//
#include "cylsolid/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "cylsolid/errors.hpp"

namespace cylsolid
{
namespace
{
constexpr double inf = std::numeric_limits<double>::infinity();

void require_finite(double value, char const* field)
{
    if (!std::isfinite(value))
    {
        throw InvalidGeometry(field, "must be finite");
    }
}

void require_positive(double value, char const* field)
{
    require_finite(value, field);
    if (!(value > 0))
    {
        throw InvalidGeometry(field, "must be > 0");
    }
}

void require_nonnegative(double value, char const* field)
{
    require_finite(value, field);
    if (!(value >= 0))
    {
        throw InvalidGeometry(field, "must be >= 0");
    }
}

struct Interval
{
    double lo{-inf};
    double hi{inf};

    bool empty() const { return !(lo <= hi); }
};

// Parameter range along the ray inside the infinite cylinder
// (x - d)^2 + y^2 <= r^2.
Interval radial_interval(Direction const& dir, double r, double d)
{
    double const a = dir.x * dir.x + dir.y * dir.y;
    double const c = (d - r) * (d + r);
    if (a == 0)
    {
        // Vertical ray: inside for all t or never
        return c <= 0 ? Interval{} : Interval{inf, -inf};
    }
    double const half_b = -d * dir.x;
    double const disc = half_b * half_b - a * c;
    if (disc < 0)
    {
        return {inf, -inf};
    }
    // Stable roots: q carries the sign of -half_b so no cancellation occurs
    double const q = -(half_b + std::copysign(std::sqrt(disc), half_b));
    if (q == 0)
    {
        return {0, 0};
    }
    double const t1 = q / a;
    double const t2 = c / q;
    return {std::min(t1, t2), std::max(t1, t2)};
}

Interval slab_interval(double dz, double zlo, double zhi)
{
    if (dz == 0)
    {
        return (zlo <= 0 && 0 <= zhi) ? Interval{} : Interval{inf, -inf};
    }
    double const t1 = zlo / dz;
    double const t2 = zhi / dz;
    return {std::min(t1, t2), std::max(t1, t2)};
}
}  // namespace

//---------------------------------------------------------------------------//
Direction Direction::from_angles(double theta, double phi)
{
    double const s = std::sin(theta);
    return {s * std::cos(phi), s * std::sin(phi), std::cos(theta)};
}

//---------------------------------------------------------------------------//
CylinderGeometry const& validate(CylinderGeometry const& g)
{
    require_positive(g.r, "r");
    require_nonnegative(g.d, "d");
    require_finite(g.l1, "l1");
    require_finite(g.l2, "l2");
    if (!(g.l1 > g.l2))
    {
        throw InvalidGeometry("l1", "must satisfy l1 > l2");
    }
    return g;
}

DiscGeometry const& validate(DiscGeometry const& g)
{
    require_positive(g.r, "r");
    require_nonnegative(g.d, "d");
    require_nonnegative(g.l, "l");
    return g;
}

SpreadGeometry const& validate(SpreadGeometry const& g)
{
    require_positive(g.r_s, "r_s");
    require_positive(g.r_d, "r_d");
    require_positive(g.l, "l");
    return g;
}

//---------------------------------------------------------------------------//
/*!
 * Test a ray from the origin against the closed solid cylinder.
 *
 * The hit set is the intersection of the slab and radial parameter intervals;
 * a touching ray (tangent to the wall or through a rim) counts as a hit. Only
 * strictly positive parameters are admissible.
 */
bool ray_hits_solid_cylinder(Direction const& dir, CylinderGeometry const& g)
{
    Interval const slab = slab_interval(dir.z, g.l2, g.l1);
    if (slab.empty())
    {
        return false;
    }
    Interval const radial = radial_interval(dir, g.r, g.d);
    if (radial.empty())
    {
        return false;
    }
    double const lo = std::max(slab.lo, radial.lo);
    double const hi = std::min(slab.hi, radial.hi);
    return lo <= hi && hi > 0;
}

//---------------------------------------------------------------------------//
bool ray_hits_disc(Direction const& dir, DiscGeometry const& g)
{
    if (dir.z == 0)
    {
        if (g.l != 0)
        {
            return false;
        }
        // In-plane ray: treat the disc as a zero-height cylinder
        Interval const radial = radial_interval(dir, g.r, g.d);
        return !radial.empty() && radial.hi > 0;
    }
    double const t = g.l / dir.z;
    if (!(t > 0))
    {
        return false;
    }
    double const dx = t * dir.x - g.d;
    double const dy = t * dir.y;
    return dx * dx + dy * dy <= g.r * g.r;
}

//---------------------------------------------------------------------------//
}  // namespace cylsolid
