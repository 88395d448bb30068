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

#include <cstddef>

namespace beamnet
{

/// Ensemble mean of the beampattern: 1/N + (1 - 1/N) (2 J1(alpha) / alpha)^2.
double average_pattern(std::size_t n_nodes, double r_tilde, double phi);

/// Asymptotic height of the n-th sidelobe peak of the average pattern.
double peak_value(std::size_t n, std::size_t n_nodes);

/// Asymptotic angle of the n-th sidelobe peak, 2 asin((n - 1/4) / (4 r_tilde)).
/// Throws RegionError when the lobe lies outside the visible region.
double peak_angle(std::size_t n, double r_tilde);

/// Asymptotic angle of the n-th zero, 2 asin((n + 1/4) / (4 r_tilde)).
double zero_angle(std::size_t n, double r_tilde);

/// Root x of (2 J1(x) / x)^2 = 1/2 divided by 4 pi; about 0.1286.
double beamwidth_constant();

/// Full 3 dB width of the mainbeam in the large-N limit.
/// Throws RegionError when r_tilde is below beamwidth_constant().
double beamwidth_3db(double r_tilde);

/// Angles phi_zero <= |phi| <= pi where every average sidelobe peak stays
/// within 3 dB of the floor 1/N.
struct SidelobeRegion
{
  std::size_t n0 = 0;
  double phi_zero = 0.0;
  double r_tilde = 0.0;
  std::size_t n_nodes = 0;

  bool contains(double phi) const;
};

/// Lower bound on n0: ceil(1/4 + (2/pi) ((N - 1) / pi)^(1/3)).
std::size_t sidelobe_index_bound(std::size_t n_nodes);

/// Throws RegionError for N = 1 or when the region would start beyond pi.
SidelobeRegion sidelobe_region(std::size_t n_nodes, double r_tilde);

} // namespace beamnet
