//---------------------------------------------------------------------------//
// Copyright the cylsolid contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cylsolid/sweep.hpp
//! \brief One-parameter sweeps and their CSV/JSON serialization
//---------------------------------------------------------------------------//
#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oracle.hpp"

namespace cylsolid
{
//---------------------------------------------------------------------------//
enum class Quantity
{
    total,  //!< whole cylinder; parameters r, d, l1, l2 (or length)
    circ,  //!< single disc; parameters r, d, l
    cyl0,  //!< cylinder over 0 <= z <= l; parameters r, d, l
    spread,  //!< coaxial disc source; parameters r_s, r_d, l
};

enum class OracleKind
{
    mc,
    quadrature,
    direct2d,
};

enum class Spacing
{
    linear,
    log,
};

enum class Format
{
    csv,
    json,
};

std::string_view to_string(Quantity q);
std::string_view to_string(OracleKind o);
Quantity parse_quantity(std::string_view s);
OracleKind parse_oracle(std::string_view s);
Format parse_format(std::string_view s);

//---------------------------------------------------------------------------//
/*!
 * A sweep over one geometry parameter.
 *
 * For \c Quantity::total the end discs may be tied with a fixed "length"
 * entry, so that e.g. varying l1 moves the whole detector (l2 = l1 - length).
 */
struct SweepSpec
{
    std::string varying;
    double from{};
    double to{};
    int steps{2};
    std::map<std::string, double> fixed;
    Quantity quantity{Quantity::total};
    std::optional<OracleKind> oracle;
    Spacing spacing{Spacing::linear};
    McConfig mc;
    QuadConfig quad;
};

struct SweepRecord
{
    double varying{};
    std::optional<double> omega;
    std::optional<double> oracle;
    std::optional<double> oracle_stderr;
    std::string regime;
    //! Reason for an "error" regime; not serialized
    std::string message;
};

inline constexpr std::string_view error_regime = "error";

// Throws InvalidSweep for unknown, missing, or over-determined parameters
void validate(SweepSpec const& spec);

// Parameter values at each step, endpoints included
std::vector<double> sweep_points(SweepSpec const& spec);

// Evaluate every step; steps with invalid geometry yield error records
std::vector<SweepRecord> run_sweep(SweepSpec const& spec);

//---------------------------------------------------------------------------//
// Serialize records; precision is in significant digits
std::string emit(std::vector<SweepRecord> const& records,
                 Format format,
                 int precision = 9);

// Parse the CSV produced by emit
std::vector<SweepRecord> parse_csv(std::string_view text);

// Write through a temporary sibling file and rename into place
void write_atomic(std::filesystem::path const& path, std::string_view bytes);

//---------------------------------------------------------------------------//
//! A bundled sweep with a file-name-friendly label
struct NamedSweep
{
    std::string label;
    SweepSpec spec;
};

// Moving-detector sweeps for r = 1, lengths 5 and 10, over a fixed set of d
std::vector<NamedSweep> canonical_sweeps();

//---------------------------------------------------------------------------//
}  // namespace cylsolid
