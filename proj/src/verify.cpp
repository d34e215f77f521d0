//---------------------------------------------------------------------------//
// Copyright the cylsolid contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file verify.cpp
//---------------------------------------------------------------------------//
#include "cylsolid/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "cylsolid/analytic.hpp"
#include "cylsolid/oracle.hpp"

namespace cylsolid
{
namespace
{
class GeometrySampler
{
  public:
    explicit GeometrySampler(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi)
    {
        return std::uniform_real_distribution<double>(lo, hi)(rng_);
    }

    double log_uniform(double lo, double hi)
    {
        return std::exp(uniform(std::log(lo), std::log(hi)));
    }

    // r in [0.5, 2], d/r in [0.1, 10] away from the rim, l/r in [0.01, 100]
    DiscGeometry disc()
    {
        double const r = uniform(0.5, 2);
        double ratio = 1;
        while (std::fabs(ratio - 1) < 1e-3)
        {
            ratio = log_uniform(0.1, 10);
        }
        return {r, ratio * r, r * log_uniform(0.01, 100)};
    }

    CylinderGeometry cylinder()
    {
        DiscGeometry const base = disc();
        double const l2 = base.r * uniform(-5, 5);
        double const length = base.r * log_uniform(0.01, 100);
        return {base.r, base.d, l2 + length, l2};
    }

  private:
    std::mt19937_64 rng_;
};

std::string describe(DiscGeometry const& g)
{
    std::ostringstream os;
    os.precision(17);
    os << "disc(r=" << g.r << ", d=" << g.d << ", l=" << g.l << ")";
    return os.str();
}

std::string describe(CylinderGeometry const& g)
{
    std::ostringstream os;
    os.precision(17);
    os << "cylinder(r=" << g.r << ", d=" << g.d << ", l1=" << g.l1
       << ", l2=" << g.l2 << ")";
    return os.str();
}

// Record one comparison; an exception from the oracle counts as a failure
void check(CampaignStats& stats,
           std::string const& what,
           std::function<double()> const& discrepancy)
{
    double diff = 0;
    std::string why;
    try
    {
        diff = discrepancy();
    }
    catch (std::exception const& e)
    {
        diff = INFINITY;
        why = std::string(": ") + e.what();
    }
    stats.worst = std::max(stats.worst, diff);
    if (diff <= stats.threshold)
    {
        ++stats.passed;
    }
    else
    {
        if (stats.first_failure.empty())
            stats.first_failure = what + why;
        ++stats.failed;
    }
}
}  // namespace

//---------------------------------------------------------------------------//
bool VerifyReport::ok() const
{
    return std::all_of(campaigns.begin(), campaigns.end(), [](auto const& c) {
        return c.ok();
    });
}

//---------------------------------------------------------------------------//
VerifyReport run_verification(VerifyOptions const& opts)
{
    if (opts.cases < 1)
        throw std::invalid_argument("verify needs at least one case");
    if (opts.mc_cases < 0)
        throw std::invalid_argument("Monte Carlo case count must be >= 0");
    if (!(opts.tol > 0))
        throw std::invalid_argument("verify tolerance must be > 0");

    QuadConfig quad;
    quad.abs_tol = opts.tol / 10;

    CampaignStats forms{"closed-form equivalence"};
    forms.threshold = 1e-11;
    CampaignStats azim{"azimuthal quadrature"};
    azim.threshold = opts.tol;
    CampaignStats disc2d{"direct 2-D disc"};
    disc2d.threshold = 10 * opts.tol;
    CampaignStats cyl2d{"direct 2-D cylinder"};
    cyl2d.threshold = 10 * opts.tol;

    GeometrySampler sampler(opts.seed);
    for (int i = 0; i < opts.cases; ++i)
    {
        DiscGeometry const g = sampler.disc();
        double const exact = omega_circ(g).value;
        std::string const what = describe(g);

        check(forms, what, [&] {
            double const mn = omega_circ_mn(g).value;
            double const bg = omega_circ_beta_gamma(g).value;
            double const delta = 0.5 * (1 - std::cos(delta_aperture(g)));
            double worst = std::max({std::fabs(mn - exact),
                                     std::fabs(bg - exact),
                                     std::fabs(delta - exact)});
            if (g.d > g.r)
            {
                worst = std::max(worst,
                                 std::fabs(omega_cyl0(g.l, g.r, g.d).value
                                           - omega_cyl0_beta_gamma(g.l, g.r, g.d).value));
            }
            return worst;
        });

        if (g.d > g.r)
        {
            check(azim, what + " cyl0", [&] {
                return std::fabs(
                    quad_azimuthal(AzimuthalTarget::cyl0, g.l, g.r, g.d, quad).value
                    - omega_cyl0(g.l, g.r, g.d).value);
            });
            check(azim, what + " circ", [&] {
                return std::fabs(
                    quad_azimuthal(AzimuthalTarget::circ_dgr, g.l, g.r, g.d, quad).value
                    - exact);
            });
        }
        else
        {
            check(azim, what + " circ", [&] {
                return std::fabs(
                    quad_azimuthal(AzimuthalTarget::circ_rgd, g.l, g.r, g.d, quad).value
                    - exact);
            });
        }

        check(disc2d, what, [&] {
            return std::fabs(direct_2d_omega(g, quad).value - exact);
        });

        CylinderGeometry const c = sampler.cylinder();
        check(cyl2d, describe(c), [&] {
            return std::fabs(direct_2d_omega(c, quad).value
                             - omega_total(c).value);
        });
    }

    VerifyReport report;
    report.campaigns = {forms, azim, disc2d, cyl2d};

    if (opts.mc_cases > 0)
    {
        CampaignStats mc{"Monte Carlo (4 sigma)"};
        mc.threshold = 4;
        // Under correct code about 0.006% of cases exceed 4 sigma; allow 4%
        mc.allowed_failures = opts.mc_cases
                              - static_cast<int>(std::ceil(0.96 * opts.mc_cases));
        McConfig cfg;
        cfg.samples = opts.samples;
        for (int i = 0; i < opts.mc_cases; ++i)
        {
            cfg.seed = opts.seed + 1000003ull * (i + 1);
            bool const use_disc = i % 2 == 0;
            DiscGeometry const g = sampler.disc();
            CylinderGeometry const c = sampler.cylinder();
            // Discrepancy in units of the binomial sigma at the exact value
            auto in_sigma = [&](double exact, SolidAngleResult const& est) {
                double const sigma = std::max(
                    *est.std_error,
                    std::sqrt(exact * (1 - exact) / static_cast<double>(cfg.samples)));
                double const diff = std::fabs(est.value - exact);
                if (sigma == 0)
                    return diff == 0 ? 0.0 : INFINITY;
                return diff / sigma;
            };
            if (use_disc)
            {
                check(mc, describe(g), [&] {
                    return in_sigma(omega_circ(g).value, mc_omega(g, cfg));
                });
            }
            else
            {
                check(mc, describe(c), [&] {
                    return in_sigma(omega_total(c).value, mc_omega(c, cfg));
                });
            }
        }
        report.campaigns.push_back(mc);
    }
    return report;
}

//---------------------------------------------------------------------------//
}  // namespace cylsolid
