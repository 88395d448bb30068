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

#include <array>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "beamnet/error.hpp"
#include "beamnet/quadrature.hpp"

namespace beamnet
{

const char *to_string(ErrorKind kind) noexcept
{
  switch (kind)
  {
  case ErrorKind::domain:
    return "domain";
  case ErrorKind::numeric:
    return "numeric";
  case ErrorKind::regime:
    return "regime";
  case ErrorKind::region:
    return "region";
  case ErrorKind::resolution:
    return "resolution";
  case ErrorKind::degenerate:
    return "degenerate";
  }
  return "unknown";
}

void QuadratureSpec::validate() const
{
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_subdivisions < 1)
    throw DomainError("QuadratureSpec requires abs_tol > 0, rel_tol > 0 and max_subdivisions >= 1");
}

namespace
{

// Boost stores the non-negative half of each symmetric rule; unfold it.
struct Gk21Tables
{
  std::array<double, 21> nodes{};
  std::array<double, 21> kronrod{};
  std::array<double, 21> gauss_w{};

  Gk21Tables()
  {
    using boost::math::quadrature::gauss;
    using boost::math::quadrature::gauss_kronrod;
    const auto &x = gauss_kronrod<double, 21>::abscissa();
    const auto &wk = gauss_kronrod<double, 21>::weights();
    const auto &wg = gauss<double, 10>::weights();
    // Positive Kronrod nodes 1..10; the Gauss nodes sit at odd indices.
    for (std::size_t i = 0; i < 11; ++i)
    {
      const double g = (i % 2 == 1) ? wg[i / 2] : 0.0;
      nodes[10 + i] = x[i];
      nodes[10 - i] = -x[i];
      kronrod[10 + i] = kronrod[10 - i] = wk[i];
      gauss_w[10 + i] = gauss_w[10 - i] = g;
    }
  }
};

struct Gl20Tables
{
  std::array<double, 20> nodes{};
  std::array<double, 20> weights{};

  Gl20Tables()
  {
    using boost::math::quadrature::gauss;
    const auto &x = gauss<double, 20>::abscissa();
    const auto &w = gauss<double, 20>::weights();
    for (std::size_t i = 0; i < 10; ++i)
    {
      nodes[10 + i] = x[i];
      nodes[9 - i] = -x[i];
      weights[10 + i] = weights[9 - i] = w[i];
    }
  }
};

} // namespace

const GaussKronrodRule &gauss_kronrod21()
{
  static const Gk21Tables tables;
  static const GaussKronrodRule rule{tables.nodes, tables.kronrod, tables.gauss_w};
  return rule;
}

const QuadratureRule &gauss_legendre20()
{
  static const Gl20Tables tables;
  static const QuadratureRule rule{tables.nodes, tables.weights};
  return rule;
}

} // namespace beamnet
