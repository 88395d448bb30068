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
#include <vector>

#include "beamnet/array_model.hpp"
#include "beamnet/parallel.hpp"
#include "beamnet/quadrature.hpp"
#include "beamnet/stats.hpp"

namespace beamnet
{

/// Above this node count the pairwise J0 sum is replaced by angular quadrature.
inline constexpr std::size_t kDirectSumLimit = 2048;

/// Directivity of one realisation with the target-frame compound values
/// z_k = r_k sin(psi_k): the inverse of 1/N + (1/N^2) sum_{k != l} J0(4 pi r_tilde (z_k - z_l)).
double directivity_realization(const NodeRealization &nodes, double r_tilde);

/// Same quantity from frozen compound values. Uses the pairwise sum up to
/// kDirectSumLimit nodes and a periodic trapezoid rule in phi / 2 beyond.
double directivity_from_z(const std::vector<double> &z, double r_tilde);

/// The angular-quadrature route, exposed for cross-checks.
double directivity_by_quadrature(const std::vector<double> &z, double r_tilde);

/// Mean directivity over n_trials realisations (n_trials >= 2).
MeanEstimate mc_average_directivity(const ArrayConfig &cfg, std::size_t n_trials, const Workers &workers = {});

/// 2 pi / integral of the average pattern over [-pi, pi], by adaptive quadrature.
double directivity_lower(std::size_t n_nodes, double r_tilde, const QuadratureSpec &quad = {});

/// N / (1 + (N - 1) 2F3(1/2, 3/2; 1, 2, 3; -(4 pi r_tilde)^2)).
double directivity_lower_closed(std::size_t n_nodes, double r_tilde, const QuadratureSpec &quad = {});

inline constexpr double kLemma1C0 = 1.1727;

/// Finite-N density bound on D_av / N: 1 / (1 + (1 - 1/N) (c0 / 4 pi) (N / r_tilde)).
double theorem1_bound(std::size_t n_nodes, double r_tilde);

/// Large-N form 1 / (1 + mu N / r_tilde) with mu = c0 / 4 pi.
double theorem1_bound_limit(std::size_t n_nodes, double r_tilde);

struct Lemma1Constants
{
  double x0 = 0.0;
  double alpha0 = 0.0;
  double c0 = 0.0;
};

/// Re-derives the constants of the sidelobe-integral bound f(x) <= c0 / x.
Lemma1Constants lemma1_constants();

struct DirectivityReport
{
  std::vector<double> d_realizations;
  MeanEstimate d_av_mc;
  double d_tilde_av = 0.0;
  double theorem1_bound = 0.0;
  std::size_t n_nodes = 0;
  double r_tilde = 0.0;
};

DirectivityReport directivity_report(const ArrayConfig &cfg, std::size_t n_trials, const QuadratureSpec &quad = {},
                                     const Workers &workers = {});

} // namespace beamnet
