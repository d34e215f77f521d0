//---------------------------------------------------------------------------//
// Copyright the cylsolid contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file quadrature.cpp
//---------------------------------------------------------------------------//
#include "cylsolid/quadrature.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "cylsolid/errors.hpp"

namespace cylsolid
{
namespace
{
struct Simpson
{
    std::function<double(double)> const& f;
    int max_depth;

    double recurse(double a,
                   double b,
                   double fa,
                   double fm,
                   double fb,
                   double whole,
                   double tol,
                   int depth) const
    {
        double const m = 0.5 * (a + b);
        double const lm = 0.5 * (a + m);
        double const rm = 0.5 * (m + b);
        if (!(a < lm && lm < m && m < rm && rm < b))
        {
            throw ConvergenceError("quadrature interval collapsed near x = "
                                   + std::to_string(m));
        }
        double const flm = f(lm);
        double const frm = f(rm);
        double const left = (m - a) / 6 * (fa + 4 * flm + fm);
        double const right = (b - m) / 6 * (fm + 4 * frm + fb);
        double const delta = left + right - whole;
        if (std::fabs(delta) <= 15 * tol)
        {
            return left + right + delta / 15;
        }
        if (depth >= max_depth)
        {
            throw ConvergenceError(
                "adaptive Simpson exhausted max_depth = "
                + std::to_string(max_depth) + " near x = " + std::to_string(m));
        }
        return recurse(a, m, fa, flm, fm, left, tol / 2, depth + 1)
               + recurse(m, b, fm, frm, fb, right, tol / 2, depth + 1);
    }
};
}  // namespace

//---------------------------------------------------------------------------//
void validate(QuadConfig const& cfg)
{
    if (!(cfg.abs_tol > 0) || !std::isfinite(cfg.abs_tol))
    {
        throw std::invalid_argument("quadrature abs_tol must be > 0");
    }
    if (cfg.max_depth < 10)
    {
        throw std::invalid_argument("quadrature max_depth must be >= 10");
    }
}

//---------------------------------------------------------------------------//
double adaptive_simpson(std::function<double(double)> const& f,
                        double a,
                        double b,
                        QuadConfig const& cfg,
                        int panels)
{
    validate(cfg);
    if (panels < 1)
    {
        throw std::invalid_argument("quadrature needs at least one panel");
    }
    if (a == b)
    {
        return 0;
    }
    Simpson const s{f, cfg.max_depth};
    double const width = (b - a) / panels;
    double const tol = cfg.abs_tol / panels;
    double total = 0;
    double lo = a;
    double flo = f(lo);
    for (int i = 0; i < panels; ++i)
    {
        double const hi = (i + 1 == panels) ? b : a + (i + 1) * width;
        double const mid = 0.5 * (lo + hi);
        double const fmid = f(mid);
        double const fhi = f(hi);
        double const whole = (hi - lo) / 6 * (flo + 4 * fmid + fhi);
        total += s.recurse(lo, hi, flo, fmid, fhi, whole, tol, 0);
        lo = hi;
        flo = fhi;
    }
    return total;
}

//---------------------------------------------------------------------------//
}  // namespace cylsolid
