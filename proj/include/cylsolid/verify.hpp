//---------------------------------------------------------------------------//
// Copyright the cylsolid contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cylsolid/verify.hpp
//! \brief Randomized concordance campaigns between closed forms and oracles
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cylsolid
{
//---------------------------------------------------------------------------//
/*!
 * Options for a verification run.
 *
 * \c tol is the allowed discrepancy for the azimuthal quadrature campaign;
 * the direct 2-D campaign allows ten times that and both integrate with an
 * absolute tolerance of tol / 10.
 */
struct VerifyOptions
{
    int cases{200};
    double tol{1e-9};
    std::uint64_t seed{7};
    int mc_cases{50};
    std::uint64_t samples{1'000'000};
};

struct CampaignStats
{
    std::string name;
    int passed{0};
    int failed{0};
    //! Failures tolerated before the campaign counts as failed
    int allowed_failures{0};
    double worst{0};
    double threshold{0};
    std::string first_failure;

    bool ok() const { return failed <= allowed_failures; }
};

struct VerifyReport
{
    std::vector<CampaignStats> campaigns;

    bool ok() const;
};

// Throws std::invalid_argument for nonpositive case counts or tolerance
VerifyReport run_verification(VerifyOptions const& opts);

//---------------------------------------------------------------------------//
}  // namespace cylsolid
