//---------------------------------------------------------------------------//
// Copyright the cylsolid contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cylsolid/quadrature.hpp
//! \brief Adaptive Simpson integration used by the numerical oracles
//---------------------------------------------------------------------------//
#pragma once

#include <functional>

namespace cylsolid
{
//---------------------------------------------------------------------------//
struct QuadConfig
{
    double abs_tol{1e-10};
    int max_depth{60};
};

void validate(QuadConfig const& cfg);

//---------------------------------------------------------------------------//
/*!
 * Integrate f over [a, b] by recursive bisection with Richardson correction.
 *
 * The interval is first split into \c panels equal pieces, each given an equal
 * share of the absolute tolerance; the share is halved at every subdivision.
 * Throws ConvergenceError when \c max_depth is reached before the local error
 * estimate drops below its share.
 */
double adaptive_simpson(std::function<double(double)> const& f,
                        double a,
                        double b,
                        QuadConfig const& cfg,
                        int panels = 1);

//---------------------------------------------------------------------------//
}  // namespace cylsolid
