//---------------------------------------------------------------------------//
// Copyright the cylsolid contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cylsolid/cli.hpp
//! \brief Command-line front end
//---------------------------------------------------------------------------//
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace cylsolid
{
//! Process exit codes
enum ExitCode : int
{
    exit_ok = 0,
    exit_io = 1,
    exit_invalid = 2,
    exit_disagree = 3,
};

// Run the CLI with arguments excluding the program name
int run_cli(std::vector<std::string> const& args,
            std::ostream& out,
            std::ostream& err);

}  // namespace cylsolid
