//---------------------------------------------------------------------------//
// Copyright the cylsolid contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file oracle.cpp
//---------------------------------------------------------------------------//
#include "cylsolid/oracle.hpp"

#include <algorithm>
#include <functional>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cylsolid/errors.hpp"

namespace cylsolid
{
namespace
{
using std::numbers::pi;

//---------------------------------------------------------------------------//
// MONTE CARLO
//---------------------------------------------------------------------------//
std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// Uniform in [0, 1) from the top 53 bits; identical on every platform
class Uniform
{
  public:
    explicit Uniform(std::uint64_t seed) : engine_(seed) {}

    double operator()() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }

  private:
    std::mt19937_64 engine_;
};

std::uint64_t chunk_seed(std::uint64_t seed, std::uint64_t chunk)
{
    return splitmix64(seed ^ splitmix64(chunk + 1));
}

/*!
 * Count hits over all chunks.
 *
 * \c trial draws whatever uniforms it needs from the chunk generator and
 * returns whether the sample hit. Per-chunk counts are summed in chunk order.
 */
template<class Trial>
McTally run_chunks(McConfig const& cfg, Trial const& trial)
{
    validate(cfg);
    std::uint64_t const nchunks = cfg.chunks;
    std::uint64_t const base = cfg.samples / nchunks;
    std::uint64_t const extra = cfg.samples % nchunks;

    std::vector<std::uint64_t> hits(nchunks, 0);
    std::atomic<std::uint64_t> next{0};
    auto work = [&] {
        for (std::uint64_t c = next++; c < nchunks; c = next++)
        {
            Uniform rng(chunk_seed(cfg.seed, c));
            std::uint64_t const count = base + (c < extra ? 1 : 0);
            std::uint64_t local = 0;
            for (std::uint64_t i = 0; i < count; ++i)
            {
                local += trial(rng) ? 1 : 0;
            }
            hits[c] = local;
        }
    };

    unsigned nthreads = cfg.threads ? cfg.threads
                                    : std::max(1u, std::thread::hardware_concurrency());
    nthreads = static_cast<unsigned>(
        std::min<std::uint64_t>(nthreads, nchunks));
    if (nthreads <= 1)
    {
        work();
    }
    else
    {
        std::vector<std::jthread> pool;
        pool.reserve(nthreads);
        for (unsigned t = 0; t < nthreads; ++t)
        {
            pool.emplace_back(work);
        }
    }

    McTally tally;
    tally.samples = cfg.samples;
    for (auto h : hits)
    {
        tally.hits += h;
    }
    return tally;
}

//---------------------------------------------------------------------------//
// QUADRATURE HELPERS
//---------------------------------------------------------------------------//
void require_positive_l(double l)
{
    if (!(l > 0) || !std::isfinite(l))
    {
        throw DomainError("quadrature oracle requires finite l > 0");
    }
}

// Polar extent of the hit set along one meridian.
template<class Hit>
double meridian_weight(Hit const& hit, double phi, double seed_theta)
{
    constexpr double half_pi = pi / 2;
    constexpr int bisections = 80;
    auto hits_at
        = [&](double theta) { return hit(Direction::from_angles(theta, phi)); };

    if (!hits_at(seed_theta))
    {
        return 0;
    }
    double theta_min = 0;
    if (!hits_at(0))
    {
        double lo = 0;
        double hi = seed_theta;
        for (int i = 0; i < bisections; ++i)
        {
            double const mid = 0.5 * (lo + hi);
            (hits_at(mid) ? hi : lo) = mid;
        }
        theta_min = 0.5 * (lo + hi);
    }
    double theta_max = half_pi;
    if (!hits_at(half_pi))
    {
        double lo = seed_theta;
        double hi = half_pi;
        for (int i = 0; i < bisections; ++i)
        {
            double const mid = 0.5 * (lo + hi);
            (hits_at(mid) ? lo : hi) = mid;
        }
        theta_max = 0.5 * (lo + hi);
    }
    double const smax = std::sin(theta_max);
    double const smin = std::sin(theta_min);
    return smax * smax - smin * smin;
}

// Horizontal distance of a point guaranteed inside the detector's meridian
// section whenever that section is nonempty: the chord midpoint, or the axis
// column when the midpoint lies behind the source.
double seed_rho(double d, double phi)
{
    return std::max(d * std::cos(phi), 0.0);
}

// Azimuth range outside which no ray can reach the detector
constexpr int azimuth_panels = 8;

// Integrate over [0, phi_o] where the integrand has a square-root branch at
// the tangent azimuth: phi = phi_o - u^2 makes it smooth in u.
double integrate_to_tangent(std::function<double(double)> const& f,
                            double phi_o,
                            QuadConfig const& cfg)
{
    auto smooth = [&](double u) { return 2 * u * f(phi_o - u * u); };
    return adaptive_simpson(smooth, 0, std::sqrt(phi_o), cfg, azimuth_panels);
}

// Azimuthal integral of a meridian weight over the half-aperture
double integrate_azimuth(std::function<double(double)> const& f,
                         double r,
                         double d,
                         QuadConfig const& cfg)
{
    if (d > r)
    {
        return integrate_to_tangent(f, std::asin(r / d), cfg);
    }
    return adaptive_simpson(f, 0, pi, cfg, azimuth_panels);
}
}  // namespace

//---------------------------------------------------------------------------//
void validate(McConfig const& cfg)
{
    if (cfg.samples < 1000)
    {
        throw std::invalid_argument("Monte Carlo needs at least 1000 samples");
    }
    if (cfg.chunks < 1)
    {
        throw std::invalid_argument("Monte Carlo needs at least one chunk");
    }
    if (cfg.chunks > cfg.samples)
    {
        throw std::invalid_argument("more Monte Carlo chunks than samples");
    }
}

Direction sample_cosine_direction(double u1, double u2)
{
    double const sin_theta = std::sqrt(u1);
    double const cos_theta = std::sqrt(1 - u1);
    double const phi = 2 * pi * u2;
    return {sin_theta * std::cos(phi), sin_theta * std::sin(phi), cos_theta};
}

//---------------------------------------------------------------------------//
McTally mc_tally(CylinderGeometry const& g, McConfig const& cfg)
{
    validate(g);
    return run_chunks(cfg, [&g](Uniform& rng) {
        double const u1 = rng();
        double const u2 = rng();
        return ray_hits_solid_cylinder(sample_cosine_direction(u1, u2), g);
    });
}

McTally mc_tally(DiscGeometry const& g, McConfig const& cfg)
{
    validate(g);
    return run_chunks(cfg, [&g](Uniform& rng) {
        double const u1 = rng();
        double const u2 = rng();
        return ray_hits_disc(sample_cosine_direction(u1, u2), g);
    });
}

McTally mc_tally_spread(SpreadGeometry const& g, McConfig const& cfg)
{
    validate(g);
    double const rd2 = g.r_d * g.r_d;
    return run_chunks(cfg, [&](Uniform& rng) {
        // Uniform point on the source disc
        double const rho = g.r_s * std::sqrt(rng());
        double const psi = 2 * pi * rng();
        double const u1 = rng();
        double const u2 = rng();
        Direction const dir = sample_cosine_direction(u1, u2);
        double const t = g.l / dir.z;
        double const x = rho * std::cos(psi) + t * dir.x;
        double const y = rho * std::sin(psi) + t * dir.y;
        return x * x + y * y <= rd2;
    });
}

SolidAngleResult to_result(McTally const& tally)
{
    double const n = static_cast<double>(tally.samples);
    double const p = static_cast<double>(tally.hits) / n;
    return {p, Method::mc, std::sqrt(p * (1 - p) / n)};
}

SolidAngleResult mc_omega(CylinderGeometry const& g, McConfig const& cfg)
{
    return to_result(mc_tally(g, cfg));
}

SolidAngleResult mc_omega(DiscGeometry const& g, McConfig const& cfg)
{
    return to_result(mc_tally(g, cfg));
}

SolidAngleResult mc_omega_spread(SpreadGeometry const& g, McConfig const& cfg)
{
    return to_result(mc_tally_spread(g, cfg));
}

//---------------------------------------------------------------------------//
/*!
 * Near/far wall distance d cos(phi) -/+ sqrt(r^2 - (d sin(phi))^2).
 *
 * A radicand within a few ulps below zero is treated as the tangency value.
 */
double rho_pm(double phi, double r, double d, Sign sign)
{
    if (sign == Sign::minus && d < r)
    {
        throw DomainError("near-wall distance is undefined for d < r");
    }
    double const ds = d * std::sin(phi);
    double radicand = (r - ds) * (r + ds);
    if (radicand < 0)
    {
        if (radicand < -4 * std::numeric_limits<double>::epsilon() * r * r)
        {
            throw DomainError("azimuth misses the cylinder (|d sin phi| > r)");
        }
        radicand = 0;
    }
    double const root = std::sqrt(radicand);
    double const mid = d * std::cos(phi);
    return sign == Sign::plus ? mid + root : mid - root;
}

//---------------------------------------------------------------------------//
AzimuthalIntegrals azimuthal_integrals(AzimuthalTarget target,
                                       double l,
                                       double r,
                                       double d,
                                       QuadConfig const& cfg)
{
    require_positive_l(l);
    if (!(r > 0) || !(d >= 0) || !std::isfinite(r) || !std::isfinite(d))
    {
        throw DomainError("quadrature oracle requires r > 0, d >= 0");
    }
    bool const skew = target != AzimuthalTarget::circ_rgd;
    if (skew && !(d > r))
    {
        throw DomainError("target requires d > r");
    }
    if (!skew && !(d < r))
    {
        throw DomainError("target requires d < r");
    }

    double const l2 = l * l;
    auto kernel = [&](Sign sign) {
        return [=](double phi) {
            double const rho = rho_pm(phi, r, d, sign);
            return l2 / (l2 + rho * rho);
        };
    };

    AzimuthalIntegrals out;
    if (skew)
    {
        double const phi_o = std::asin(r / d);
        out.a_minus_phi_o = integrate_to_tangent(kernel(Sign::minus), phi_o, cfg);
        if (target == AzimuthalTarget::circ_dgr)
        {
            out.a_plus_phi_o = integrate_to_tangent(kernel(Sign::plus), phi_o, cfg);
        }
    }
    else
    {
        out.a_plus_pi
            = adaptive_simpson(kernel(Sign::plus), 0, pi, cfg, azimuth_panels);
    }
    return out;
}

double assemble(AzimuthalTarget target, AzimuthalIntegrals const& a)
{
    switch (target)
    {
        case AzimuthalTarget::cyl0:
            return a.a_minus_phi_o.value() / pi;
        case AzimuthalTarget::circ_dgr:
            return (a.a_minus_phi_o.value() - a.a_plus_phi_o.value()) / pi;
        case AzimuthalTarget::circ_rgd:
            return 1 - a.a_plus_pi.value() / pi;
    }
    return 0;
}

SolidAngleResult quad_azimuthal(AzimuthalTarget target,
                                double l,
                                double r,
                                double d,
                                QuadConfig const& cfg)
{
    double const value = assemble(target, azimuthal_integrals(target, l, r, d, cfg));
    return {value, Method::quadrature, std::nullopt};
}

//---------------------------------------------------------------------------//
/*!
 * Integrate the hit set of the closed solid cylinder over the hemisphere.
 *
 * By mirror symmetry in y only azimuths in [0, pi] are integrated. Each
 * meridian hit set is a single polar interval because the solid is convex.
 */
SolidAngleResult direct_2d_omega(CylinderGeometry const& g,
                                 QuadConfig const& cfg)
{
    validate(g);
    validate(cfg);
    if (g.l1 <= 0)
    {
        return {0, Method::direct2d, std::nullopt};
    }
    double const zmid = 0.5 * (std::max(g.l2, 0.0) + g.l1);
    auto hit = [&g](Direction const& dir) {
        return ray_hits_solid_cylinder(dir, g);
    };
    auto integrand = [&](double phi) {
        double const seed = std::atan2(seed_rho(g.d, phi), zmid);
        return meridian_weight(hit, phi, seed);
    };
    double const total = integrate_azimuth(integrand, g.r, g.d, cfg);
    return {std::clamp(total / pi, 0.0, 1.0), Method::direct2d, std::nullopt};
}

SolidAngleResult direct_2d_omega(DiscGeometry const& g, QuadConfig const& cfg)
{
    validate(g);
    validate(cfg);
    if (g.l == 0)
    {
        return {0, Method::direct2d, std::nullopt};
    }
    auto hit = [&g](Direction const& dir) { return ray_hits_disc(dir, g); };
    auto integrand = [&](double phi) {
        double const seed = std::atan2(seed_rho(g.d, phi), g.l);
        return meridian_weight(hit, phi, seed);
    };
    double const total = integrate_azimuth(integrand, g.r, g.d, cfg);
    return {std::clamp(total / pi, 0.0, 1.0), Method::direct2d, std::nullopt};
}

//---------------------------------------------------------------------------//
/*!
 * Average the point-source disc solid angle over a uniform source disc:
 * (2 / rs^2) * integral of rho * omega_circ(rd, rho, l) over [0, rs].
 *
 * The integrand has a kink at rho = rd, which is made a panel boundary.
 */
SolidAngleResult quad_spread(SpreadGeometry const& g, QuadConfig const& cfg)
{
    validate(g);
    auto integrand = [&g](double rho) {
        return rho * omega_circ({g.r_d, rho, g.l}).value;
    };
    // Tolerance on the raw integral so the normalized value meets abs_tol
    QuadConfig scaled = cfg;
    scaled.abs_tol = cfg.abs_tol * g.r_s * g.r_s / 4;
    double total = 0;
    if (g.r_d < g.r_s)
    {
        total = adaptive_simpson(integrand, 0, g.r_d, scaled, azimuth_panels)
                + adaptive_simpson(
                    integrand, g.r_d, g.r_s, scaled, azimuth_panels);
    }
    else
    {
        total = adaptive_simpson(integrand, 0, g.r_s, scaled, azimuth_panels);
    }
    double const value = 2 * total / (g.r_s * g.r_s);
    return {std::clamp(value, 0.0, 1.0), Method::quadrature, std::nullopt};
}

//---------------------------------------------------------------------------//
}  // namespace cylsolid
