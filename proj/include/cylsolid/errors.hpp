//---------------------------------------------------------------------------//
// Copyright the cylsolid contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file cylsolid/errors.hpp
//! \brief Exception types thrown by the library
//---------------------------------------------------------------------------//
#pragma once

#include <stdexcept>
#include <string>

namespace cylsolid
{
//---------------------------------------------------------------------------//
/*!
 * A geometry violated one of its type invariants.
 *
 * The offending field name is kept separately so callers (the CLI, the sweep
 * engine) can report it without parsing the message.
 */
class InvalidGeometry : public std::invalid_argument
{
  public:
    InvalidGeometry(std::string field, std::string const& reason)
        : std::invalid_argument("invalid geometry: " + field + ": " + reason)
        , field_(std::move(field))
    {
    }

    std::string const& field() const noexcept { return field_; }

  private:
    std::string field_;
};

//! A valid geometry lies outside the domain of a particular formula
class DomainError : public std::domain_error
{
  public:
    using std::domain_error::domain_error;
};

//! Adaptive quadrature ran out of subdivision depth
class ConvergenceError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! Sweep parameters are contradictory or incomplete
class InvalidSweep : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

//! Output sink failure
class IoError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//---------------------------------------------------------------------------//
}  // namespace cylsolid
