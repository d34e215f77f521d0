//---------------------------------------------------------------------------//
// Copyright the cylsolid contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file main.cpp
//---------------------------------------------------------------------------//
#include <iostream>
#include <string>
#include <vector>

#include "cylsolid/cli.hpp"

int main(int argc, char** argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return cylsolid::run_cli(args, std::cout, std::cerr);
}
