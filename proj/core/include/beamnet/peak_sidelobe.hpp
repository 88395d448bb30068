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
#include <span>
#include <vector>

#include "beamnet/array_model.hpp"
#include "beamnet/average_pattern.hpp"
#include "beamnet/ccdf.hpp"
#include "beamnet/parallel.hpp"

namespace beamnet
{

struct OutageQuery
{
  std::size_t n_nodes = 0;
  double r_tilde = 0.0;
  double p0 = 0.0;

  double normalized_p0() const { return static_cast<double>(n_nodes) * p0; }

  static OutageQuery from_normalized(std::size_t n_nodes, double r_tilde, double normalized_p0);
};

/// Variance of the derivative of one quadrature component in u = sin(phi / 2): 2 pi^2 r_tilde^2.
double sigma2_xprime(double r_tilde);

/// Mean upward crossings of the envelope level a per unit u: 2 sqrt(pi) r_tilde a exp(-a^2).
double crossing_rate(double level_a, double r_tilde);

/// Expected number of upward crossings of level a inside the sidelobe region.
/// Throws RegimeError for a <= 1/sqrt(2).
double mean_upcrossings(double level_a, const SidelobeRegion &region);

/// min(1, mean_upcrossings(sqrt(N P0), region)); requires N P0 > 1/2.
double outage_upper_bound(const OutageQuery &q, const SidelobeRegion &region);

/// Region-free form 4 sqrt(pi) r_tilde sqrt(P0~) exp(-P0~), not clamped.
double outage_bound_simplified(double normalized_p0, double r_tilde);

/// Larger root P0~ > 1/2 of outage_bound_simplified(P0~, r_tilde) = p_out.
double threshold_for_outage(double p_out, double r_tilde);

struct PeakSearchOptions
{
  double sampling_factor = 1.0; // multiples of 16 pi r_tilde samples over the region
  bool refine = false;          // 3-point parabolic refinement of the grid maximum
};

/// Number of samples the peak search places on each side of the region.
std::size_t peak_samples_per_side(const SidelobeRegion &region, const PeakSearchOptions &opt);

/// Largest pattern value over the region for one realisation.
double region_peak(const NodeCoordinates &nodes, const SidelobeRegion &region, const PeakSearchOptions &opt = {});

/// Regional maxima of n_trials realisations in stream order.
std::vector<double> mc_peak_maxima(const ArrayConfig &cfg, std::size_t n_trials, const PeakSearchOptions &opt = {},
                                   const Workers &workers = {});

/// Empirical CCDF of the regional maximum at linear thresholds P0.
CcdfCurve mc_peak_outage(const ArrayConfig &cfg, std::span<const double> thresholds, std::size_t n_trials,
                         const PeakSearchOptions &opt = {}, const Workers &workers = {});

/// Empirical CCDF from precomputed maxima.
CcdfCurve peak_outage_from_maxima(std::span<const double> maxima, std::span<const double> thresholds);

} // namespace beamnet
