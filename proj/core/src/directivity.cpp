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

#include "beamnet/directivity.hpp"

#include <cmath>
#include <numbers>

#include "beamnet/average_pattern.hpp"
#include "beamnet/error.hpp"
#include "beamnet/specfun.hpp"

namespace beamnet
{

using std::numbers::pi;

namespace
{

std::vector<double> target_frame_z(const NodeRealization &nodes)
{
  std::vector<double> z(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k)
    z[k] = nodes.radii[k] * std::sin(nodes.angles[k]);
  return z;
}

} // namespace

double directivity_by_quadrature(const std::vector<double> &z, double r_tilde)
{
  if (z.empty())
    throw DomainError("directivity: at least one node is required");
  // The bracket equals the mean of |F(4 pi r_tilde sin t)|^2 over one period of t = phi / 2.
  // Its Fourier coefficients J_n(c (z_k - z_l)) are negligible once n exceeds 8 pi r_tilde.
  const double c = 4.0 * pi * r_tilde;
  const auto m = static_cast<std::size_t>(2.0 * std::ceil(8.0 * pi * r_tilde) + 128.0);
  double sum = 0.0;
  for (std::size_t i = 0; i < m; ++i)
  {
    const double t = 2.0 * pi * static_cast<double>(i) / static_cast<double>(m);
    sum += std::norm(array_factor_z(z, c * std::sin(t)));
  }
  return static_cast<double>(m) / sum;
}

double directivity_from_z(const std::vector<double> &z, double r_tilde)
{
  if (z.empty())
    throw DomainError("directivity: at least one node is required");
  if (z.size() > kDirectSumLimit)
    return directivity_by_quadrature(z, r_tilde);

  const double n = static_cast<double>(z.size());
  const double c = 4.0 * pi * r_tilde;
  double pairs = 0.0;
  for (std::size_t k = 0; k < z.size(); ++k)
    for (std::size_t l = k + 1; l < z.size(); ++l)
      pairs += specfun::bessel_j0(c * (z[k] - z[l]));
  return 1.0 / (1.0 / n + 2.0 * pairs / (n * n));
}

double directivity_realization(const NodeRealization &nodes, double r_tilde)
{
  return directivity_from_z(target_frame_z(nodes), r_tilde);
}

MeanEstimate mc_average_directivity(const ArrayConfig &cfg, std::size_t n_trials, const Workers &workers)
{
  cfg.validate();
  if (n_trials < 2)
    throw DomainError("mc_average_directivity: at least two trials are required");
  auto partial = run_trial_blocks<MeanAccumulator>(n_trials, workers, [] { return MeanAccumulator{}; },
                                                   [&](MeanAccumulator &acc, std::size_t trial) {
                                                     acc.add(directivity_realization(sample_realization(cfg, trial), cfg.r_tilde));
                                                   });
  MeanAccumulator total;
  for (const auto &block : partial)
    total.merge(block);
  return total.estimate();
}

double directivity_lower(std::size_t n_nodes, double r_tilde, const QuadratureSpec &quad)
{
  if (n_nodes < 1)
    throw DomainError("directivity_lower: n_nodes must be at least 1");
  if (n_nodes == 1)
    return 1.0;
  // P_av is even in phi; integrate the oscillating part over [0, pi].
  const int panels = 1 + static_cast<int>(std::ceil(4.0 * r_tilde));
  const auto lobe = integrate(
      [&](double phi) {
        const double g = specfun::j1_ratio(alpha(phi, r_tilde));
        return g * g;
      },
      0.0, pi, quad, panels);
  const double n = static_cast<double>(n_nodes);
  const double integral = 2.0 * pi / n + (1.0 - 1.0 / n) * 2.0 * lobe.value;
  return 2.0 * pi / integral;
}

double directivity_lower_closed(std::size_t n_nodes, double r_tilde, const QuadratureSpec &quad)
{
  if (n_nodes < 1)
    throw DomainError("directivity_lower_closed: n_nodes must be at least 1");
  const double n = static_cast<double>(n_nodes);
  return n / (1.0 + (n - 1.0) * specfun::hyp2f3_sidelobe(4.0 * pi * r_tilde, quad));
}

double theorem1_bound(std::size_t n_nodes, double r_tilde)
{
  if (n_nodes < 1 || !(r_tilde > 0.0))
    throw DomainError("theorem1_bound: need n_nodes >= 1 and r_tilde > 0");
  const double n = static_cast<double>(n_nodes);
  return 1.0 / (1.0 + (1.0 - 1.0 / n) * (kLemma1C0 / (4.0 * pi)) * (n / r_tilde));
}

double theorem1_bound_limit(std::size_t n_nodes, double r_tilde)
{
  if (n_nodes < 1 || !(r_tilde > 0.0))
    throw DomainError("theorem1_bound_limit: need n_nodes >= 1 and r_tilde > 0");
  return 1.0 / (1.0 + (kLemma1C0 / (4.0 * pi)) * static_cast<double>(n_nodes) / r_tilde);
}

Lemma1Constants lemma1_constants()
{
  auto gap = [](double t) { return specfun::bessel_j1(t) - std::sqrt(2.0 / (pi * t)); };
  double lo = 2.0;
  double hi = 3.0;
  if (!(gap(lo) > 0.0 && gap(hi) < 0.0))
    throw NumericError("lemma1_constants: J1(t) and sqrt(2 / (pi t)) are not bracketed on [2, 3]", gap(lo));
  while (hi - lo > 1e-14)
  {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) > 0.0 ? lo : hi) = mid;
  }
  Lemma1Constants c;
  c.x0 = 0.5 * (lo + hi);
  c.alpha0 = std::acos(std::sqrt(8.0 / (pi * c.x0 * c.x0 * c.x0))) / c.x0;
  c.c0 = (c.x0 + std::sin(2.0 * c.alpha0 * c.x0) / (2.0 * c.alpha0) + 8.0 / (pi * c.x0 * c.x0)) / pi;
  return c;
}

DirectivityReport directivity_report(const ArrayConfig &cfg, std::size_t n_trials, const QuadratureSpec &quad,
                                     const Workers &workers)
{
  cfg.validate();
  if (n_trials < 2)
    throw DomainError("directivity_report: at least two trials are required");
  DirectivityReport report;
  report.n_nodes = cfg.n_nodes;
  report.r_tilde = cfg.r_tilde;
  report.d_realizations.resize(n_trials);
  parallel_for(n_trials, workers, [&](std::size_t trial) {
    report.d_realizations[trial] = directivity_realization(sample_realization(cfg, trial), cfg.r_tilde);
  });
  MeanAccumulator acc;
  for (double d : report.d_realizations)
    acc.add(d);
  report.d_av_mc = acc.estimate();
  report.d_tilde_av = directivity_lower(cfg.n_nodes, cfg.r_tilde, quad);
  report.theorem1_bound = theorem1_bound(cfg.n_nodes, cfg.r_tilde);
  return report;
}

} // namespace beamnet
