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

#include "beamnet/average_pattern.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "beamnet/array_model.hpp"
#include "beamnet/error.hpp"
#include "beamnet/specfun.hpp"

namespace beamnet
{

using std::numbers::pi;

namespace
{

void require_nodes(std::size_t n_nodes)
{
  if (n_nodes < 1)
    throw DomainError("n_nodes must be at least 1");
}

double lobe_angle(double offset_n, double r_tilde, const char *what)
{
  if (!(r_tilde > 0.0))
    throw DomainError(std::string(what) + ": r_tilde must be positive");
  const double s = offset_n / (4.0 * r_tilde);
  if (s > 1.0)
    throw RegionError(std::string(what) + ": lobe lies outside the visible region for this r_tilde");
  return 2.0 * std::asin(s);
}

} // namespace

double average_pattern(std::size_t n_nodes, double r_tilde, double phi)
{
  require_nodes(n_nodes);
  const double n = static_cast<double>(n_nodes);
  const double g = specfun::j1_ratio(alpha(phi, r_tilde));
  return 1.0 / n + (1.0 - 1.0 / n) * g * g;
}

double peak_value(std::size_t n, std::size_t n_nodes)
{
  require_nodes(n_nodes);
  if (n < 1)
    throw DomainError("peak_value: peak index starts at 1");
  const double nn = static_cast<double>(n_nodes);
  const double t = 2.0 / (pi * (static_cast<double>(n) - 0.25));
  return 1.0 / nn + (1.0 - 1.0 / nn) * t * t * t / pi;
}

double peak_angle(std::size_t n, double r_tilde)
{
  if (n < 1)
    throw DomainError("peak_angle: peak index starts at 1");
  return lobe_angle(static_cast<double>(n) - 0.25, r_tilde, "peak_angle");
}

double zero_angle(std::size_t n, double r_tilde)
{
  if (n < 1)
    throw DomainError("zero_angle: zero index starts at 1");
  return lobe_angle(static_cast<double>(n) + 0.25, r_tilde, "zero_angle");
}

double beamwidth_constant()
{
  static const double constant = [] {
    // (2 J1(x)/x)^2 falls monotonically from 1 to 0 on [0, j_{1,1}].
    double lo = 0.0;
    double hi = 3.8317;
    const double target = std::sqrt(0.5);
    while (hi - lo > 1e-15)
    {
      const double mid = 0.5 * (lo + hi);
      if (specfun::j1_ratio(mid) > target)
        lo = mid;
      else
        hi = mid;
    }
    return 0.5 * (lo + hi) / (4.0 * pi);
  }();
  return constant;
}

double beamwidth_3db(double r_tilde)
{
  const double c = beamwidth_constant();
  if (!(r_tilde >= c))
    throw RegionError("beamwidth_3db: r_tilde is too small for the average pattern to reach -3 dB");
  return 2.0 * std::asin(std::min(1.0, c / r_tilde));
}

bool SidelobeRegion::contains(double phi) const
{
  const double a = std::fabs(phi);
  return a >= phi_zero && a <= pi;
}

std::size_t sidelobe_index_bound(std::size_t n_nodes)
{
  require_nodes(n_nodes);
  const double n = static_cast<double>(n_nodes);
  return static_cast<std::size_t>(std::ceil(0.25 + (2.0 / pi) * std::cbrt((n - 1.0) / pi)));
}

SidelobeRegion sidelobe_region(std::size_t n_nodes, double r_tilde)
{
  require_nodes(n_nodes);
  if (n_nodes == 1)
    throw RegionError("sidelobe_region: a single node has no sidelobes");
  if (!(r_tilde > 0.0))
    throw DomainError("sidelobe_region: r_tilde must be positive");

  const double n = static_cast<double>(n_nodes);
  const std::size_t bound = sidelobe_index_bound(n_nodes);
  std::size_t n0 = bound > 1 ? bound - 1 : 1;
  while (n * peak_value(n0, n_nodes) > 2.0)
    ++n0;
  if (n0 < bound)
    n0 = bound;

  SidelobeRegion region;
  region.n0 = n0;
  region.r_tilde = r_tilde;
  region.n_nodes = n_nodes;
  if ((static_cast<double>(n0) + 0.25) / (4.0 * r_tilde) > 1.0)
    throw RegionError("sidelobe_region: the 3 dB sidelobe region is empty for N = " + std::to_string(n_nodes) +
                      ", r_tilde = " + std::to_string(r_tilde));
  region.phi_zero = zero_angle(n0, r_tilde);
  return region;
}

} // namespace beamnet
