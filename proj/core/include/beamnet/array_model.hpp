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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "beamnet/parallel.hpp"

namespace beamnet
{

/// Identity of an experiment: N nodes uniform on a disk of radius R = r_tilde * lambda.
struct ArrayConfig
{
  std::size_t n_nodes = 16;
  double r_tilde = 2.0;
  std::uint64_t seed = 0;

  /// Throws DomainError unless n_nodes >= 1 and r_tilde > 0.
  void validate() const;
};

/// Node positions in polar form: radii normalised by R, angles in [-pi, pi).
struct NodeRealization
{
  std::vector<double> radii;
  std::vector<double> angles;

  std::size_t size() const { return radii.size(); }
};

/// Cartesian node coordinates (normalised by R), the fast form for pattern sweeps.
struct NodeCoordinates
{
  std::vector<double> x;
  std::vector<double> y;

  std::size_t size() const { return x.size(); }
};

/// Power versus azimuth. Per-realisation curves are relative to the coherent
/// mainbeam (power 1 at phi = 0); Monte Carlo curves also carry standard errors.
struct PatternCurve
{
  std::vector<double> angles;
  std::vector<double> power;
  std::vector<double> std_error;
  std::string label;
};

/// Deterministic in (cfg.seed, stream_index): radius sqrt(u), angle uniform.
NodeRealization sample_realization(const ArrayConfig &cfg, std::uint64_t stream_index);

NodeCoordinates to_cartesian(const NodeRealization &nodes);

/// 4 pi r_tilde sin(phi / 2).
double alpha(double phi, double r_tilde);

/// z_k = r_k sin(psi_k - phi / 2), the node projection seen from look angle phi.
std::vector<double> compound_z(const NodeRealization &nodes, double phi);

/// (1/N) sum_k exp(-j alpha(phi) z_k).
std::complex<double> array_factor(const NodeRealization &nodes, double phi, double r_tilde);

/// (1/N) sum_k exp(-j alpha_value z_k) for a frozen set of compound values.
std::complex<double> array_factor_z(std::span<const double> z, double alpha_value);

/// |array_factor|^2 from Cartesian coordinates.
double pattern_power(const NodeCoordinates &nodes, double phi, double r_tilde);

PatternCurve beampattern(const NodeRealization &nodes, std::span<const double> grid, double r_tilde);

/// count points evenly spaced on [lo, hi], both ends included.
std::vector<double> uniform_grid(std::size_t count, double lo, double hi);

/// Smallest odd grid size over [-pi, pi] with at least 16 pi r_tilde points.
std::size_t default_grid_size(double r_tilde);

/// Mean pattern over n_trials realisations (streams 0..n_trials-1) with standard errors.
PatternCurve mc_mean_pattern(const ArrayConfig &cfg, std::span<const double> grid, std::size_t n_trials,
                             const Workers &workers = {});

/// P(phi) of each of n_trials realisations, in stream order.
std::vector<double> mc_pattern_samples(const ArrayConfig &cfg, double phi, std::size_t n_trials,
                                       const Workers &workers = {});

} // namespace beamnet
