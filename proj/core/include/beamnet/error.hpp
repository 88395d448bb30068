// SPDX-License-Identifier: Apache-2.0
//
// beamnet: beampattern statistics of random collaborative sensor arrays
// Copyright (C) 2026 The beamnet Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <stdexcept>
#include <string>

namespace beamnet
{

enum class ErrorKind
{
  domain,     // argument outside the mathematical domain of an operation
  numeric,    // iterative method failed to converge
  regime,     // formula requested outside its range of validity
  region,     // requested angle or lobe is outside the visible / sidelobe region
  resolution, // discretisation too coarse for the requested accuracy
  degenerate, // distribution collapses to a point mass
};

const char *to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, const std::string &what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

class DomainError : public Error
{
public:
  explicit DomainError(const std::string &what) : Error(ErrorKind::domain, what) {}
};

// Carries the last error estimate of the failed iteration.
class NumericError : public Error
{
public:
  NumericError(const std::string &what, double residual)
      : Error(ErrorKind::numeric, what + " (residual estimate " + std::to_string(residual) + ")"), residual_(residual)
  {
  }
  double residual() const noexcept { return residual_; }

private:
  double residual_;
};

class RegimeError : public Error
{
public:
  explicit RegimeError(const std::string &what) : Error(ErrorKind::regime, what) {}
};

class RegionError : public Error
{
public:
  explicit RegionError(const std::string &what) : Error(ErrorKind::region, what) {}
};

class ResolutionError : public Error
{
public:
  ResolutionError(const std::string &what, double leaked_mass)
      : Error(ErrorKind::resolution, what), leaked_mass_(leaked_mass)
  {
  }
  double leaked_mass() const noexcept { return leaked_mass_; }

private:
  double leaked_mass_;
};

class DegenerateError : public Error
{
public:
  explicit DegenerateError(const std::string &what) : Error(ErrorKind::degenerate, what) {}
};

} // namespace beamnet
