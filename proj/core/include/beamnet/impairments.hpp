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

#include "beamnet/array_model.hpp"
#include "beamnet/parallel.hpp"
#include "beamnet/quadrature.hpp"
#include "beamnet/rng.hpp"

namespace beamnet
{

/// Phase-locked-loop jitter with loop SNR rho = 1 / sigma^2.
struct ClosedLoopParams
{
  double loop_snr = 1.0;

  double sigma2_phi() const { return 1.0 / loop_snr; }
  void validate() const;
};

/// Location-estimation errors: radial error uniform on +-r_max (in wavelengths),
/// angular error uniform on +-psi_max.
struct OpenLoopParams
{
  double rmax_over_lambda = 0.0;
  double psi_max = 0.0;

  void validate() const;
};

enum class ImpairmentKind
{
  closed_loop,
  open_loop,
};

struct ImpairmentParams
{
  ImpairmentKind kind = ImpairmentKind::closed_loop;
  ClosedLoopParams closed_loop;
  OpenLoopParams open_loop;
};

/// exp(rho cos x) / (2 pi I0(rho)) on [-pi, pi].
double tikhonov_pdf(double x, const ClosedLoopParams &p);

/// Rejection sampler: uniform proposal up to rho = 100, truncated normal beyond.
double sample_tikhonov(const ClosedLoopParams &p, StreamRng &rng);

/// I1(rho) / I0(rho).
double attenuation_phase(const ClosedLoopParams &p);

/// 1/N + (1 - 1/N) (2 J1(alpha) / alpha)^2 A_phi^2.
double avg_pattern_closed_loop(std::size_t n_nodes, double r_tilde, double phi, const ClosedLoopParams &p);

/// Density of v = dr cos(theta) with dr uniform on +-r_max and theta uniform,
/// in the units of r_max. Throws DegenerateError for r_max = 0.
double radial_error_pdf(double v, const OpenLoopParams &p);

/// 1F2(1/2; 1, 3/2; -(pi r_max / lambda)^2).
double attenuation_radial(const OpenLoopParams &p, const QuadratureSpec &quad = {});

/// Mean of 2 J1(x) / x at x = 4 pi r_tilde sin((phi - d) / 2) over d uniform on +-psi_max.
double attenuation_angle(double phi, const OpenLoopParams &p, double r_tilde, const QuadratureSpec &quad = {});

/// Small-angle form of attenuation_angle in terms of 1F2(1/2; 3/2, 2; -x^2):
/// (1/2)(1 + phi/psi_max) F(pi r_tilde (phi + psi_max)) + (1/2)(1 - phi/psi_max) F(pi r_tilde (phi - psi_max)).
double apsi_mainbeam_approx(double phi, const OpenLoopParams &p, double r_tilde);

/// The same two-term form with the weights interchanged, as it is sometimes
/// quoted; kept to document that it does not follow from the mean.
double apsi_mainbeam_swapped(double phi, const OpenLoopParams &p, double r_tilde);

/// 1/N + (1 - 1/N) A_psi(phi)^2 A_r^2.
double avg_pattern_open_loop(std::size_t n_nodes, double r_tilde, double phi, const OpenLoopParams &p,
                             const QuadratureSpec &quad = {});

/// Analytic average pattern for either impairment.
double avg_pattern_impaired(std::size_t n_nodes, double r_tilde, double phi, const ImpairmentParams &p,
                            const QuadratureSpec &quad = {});

/// Monte Carlo mean pattern with per-node phase jitter (closed loop) or per-node
/// location errors applied through the exact far-field phase (open loop).
PatternCurve mc_impaired_pattern(const ArrayConfig &cfg, std::span<const double> grid, const ImpairmentParams &p,
                                 std::size_t n_trials, const Workers &workers = {});

} // namespace beamnet
