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
#include <span>
#include <string>
#include <vector>

#include "beamnet/array_model.hpp"
#include "beamnet/parallel.hpp"
#include "beamnet/quadrature.hpp"

namespace beamnet
{

enum class CcdfMethod
{
  exact_cf,
  precise_gaussian,
  marcum,
  rayleigh,
  monte_carlo,
};

const char *to_string(CcdfMethod method) noexcept;

/// Exceedance probabilities Pr[P(phi) > P0] on a threshold grid. std_errors is
/// filled for Monte Carlo curves only.
struct CcdfCurve
{
  std::vector<double> thresholds;
  std::vector<double> probs;
  std::vector<double> std_errors;
  CcdfMethod method = CcdfMethod::exact_cf;
};

/// Moments of X = sum cos(alpha z_k) / sqrt(N) and Y = sum sin(alpha z_k) / sqrt(N).
struct GaussianMoments
{
  double m_x = 0.0;
  double var_x = 0.0;
  double var_y = 0.0;
  double alpha = 0.0;
  std::size_t n_nodes = 0;
};

/// E exp(j (omega cos(alpha z) + nu sin(alpha z))) for z with density (2/pi) sqrt(1 - z^2).
std::complex<double> joint_cf(double omega, double nu, double alpha, const QuadratureSpec &quad = {});

/// Density of (sum cos(alpha z_k), sum sin(alpha z_k)) sampled on a
/// grid_size x grid_size lattice over [-half_width, half_width)^2.
/// values is row-major with the first index along x.
struct JointDensity
{
  std::size_t grid_size = 0;
  double half_width = 0.0;
  double spacing = 0.0;
  std::vector<double> values;
  double pad_mass = 0.0; // |density| mass outside [-N, N]^2

  double coordinate(std::size_t index) const { return -half_width + spacing * static_cast<double>(index); }
  double total_mass() const;
};

inline constexpr std::size_t kDefaultCfGrid = 1024;
inline constexpr double kAliasingTolerance = 1e-6;

/// Inverts the N-th power of joint_cf with a 2-D FFT. Throws ResolutionError
/// when more than kAliasingTolerance of the mass leaks outside [-N, N]^2.
JointDensity exact_joint_density(std::size_t n_nodes, double alpha, std::size_t grid_size = kDefaultCfGrid,
                                 const QuadratureSpec &quad = {}, const Workers &workers = {});

CcdfCurve exact_ccdf(std::size_t n_nodes, double alpha, std::span<const double> thresholds,
                     std::size_t grid_size = kDefaultCfGrid, const QuadratureSpec &quad = {},
                     const Workers &workers = {});

GaussianMoments gaussian_moments(std::size_t n_nodes, double alpha);

/// Bivariate Gaussian CCDF as an angular integral of erfc terms.
CcdfCurve ccdf_precise_gaussian(const GaussianMoments &mom, std::span<const double> thresholds,
                                const QuadratureSpec &quad = {});

/// Equal-variance (Rice) form Q1(sqrt(2) m_x, sqrt(2 N P0)).
CcdfCurve ccdf_marcum(const GaussianMoments &mom, std::span<const double> thresholds);

/// Zero-mean form exp(-N P0).
CcdfCurve ccdf_rayleigh(std::size_t n_nodes, std::span<const double> thresholds);

CcdfCurve mc_ccdf(const ArrayConfig &cfg, double phi, std::span<const double> thresholds, std::size_t n_trials,
                  const Workers &workers = {});

/// |E X|^2 = N (2 J1(alpha) / alpha)^2 inside the 3 dB sidelobe region, with
/// the limit 1 / (1 - 1/N) it should respect.
struct ZeroMeanBound
{
  double value = 0.0;
  double limit = 0.0;

  bool holds() const { return value <= limit; }
};

/// Throws RegionError when phi is outside the 3 dB sidelobe region.
ZeroMeanBound zero_mean_bound(std::size_t n_nodes, double r_tilde, double phi);

} // namespace beamnet
