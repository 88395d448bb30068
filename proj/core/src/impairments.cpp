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

#include "beamnet/impairments.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "beamnet/average_pattern.hpp"
#include "beamnet/error.hpp"
#include "beamnet/specfun.hpp"
#include "beamnet/stats.hpp"

namespace beamnet
{

using std::numbers::pi;

void ClosedLoopParams::validate() const
{
  if (!(loop_snr > 0.0) || !std::isfinite(loop_snr))
    throw DomainError("ClosedLoopParams: loop_snr must be positive and finite");
}

void OpenLoopParams::validate() const
{
  if (!(rmax_over_lambda >= 0.0) || !std::isfinite(rmax_over_lambda))
    throw DomainError("OpenLoopParams: rmax_over_lambda must be non-negative");
  if (!(psi_max >= 0.0 && psi_max <= pi))
    throw DomainError("OpenLoopParams: psi_max must lie in [0, pi]");
}

double tikhonov_pdf(double x, const ClosedLoopParams &p)
{
  p.validate();
  if (!(std::fabs(x) <= pi))
    throw DomainError("tikhonov_pdf: x must satisfy |x| <= pi");
  const double rho = p.loop_snr;
  return std::exp(rho * (std::cos(x) - 1.0)) / (2.0 * pi * specfun::bessel_i0_scaled(rho));
}

double sample_tikhonov(const ClosedLoopParams &p, StreamRng &rng)
{
  p.validate();
  const double rho = p.loop_snr;
  if (rho <= 100.0)
  {
    for (;;)
    {
      const double x = rng.uniform(-pi, pi);
      if (rng.uniform() < std::exp(rho * (std::cos(x) - 1.0)))
        return x;
    }
  }
  // cos x - 1 <= -(2 / pi^2) x^2 on [-pi, pi], so N(0, pi^2 / (4 rho)) envelopes the density.
  const double kappa = 4.0 / (pi * pi);
  const double sd = 1.0 / std::sqrt(kappa * rho);
  for (;;)
  {
    const double x = sd * rng.normal();
    if (std::fabs(x) > pi)
      continue;
    if (rng.uniform() < std::exp(rho * (std::cos(x) - 1.0) + 0.5 * kappa * rho * x * x))
      return x;
  }
}

double attenuation_phase(const ClosedLoopParams &p)
{
  p.validate();
  return specfun::bessel_i_ratio(p.loop_snr);
}

double avg_pattern_closed_loop(std::size_t n_nodes, double r_tilde, double phi, const ClosedLoopParams &p)
{
  if (n_nodes < 1)
    throw DomainError("avg_pattern_closed_loop: n_nodes must be at least 1");
  const double n = static_cast<double>(n_nodes);
  const double g = specfun::j1_ratio(alpha(phi, r_tilde));
  const double a = attenuation_phase(p);
  return 1.0 / n + (1.0 - 1.0 / n) * g * g * a * a;
}

double radial_error_pdf(double v, const OpenLoopParams &p)
{
  p.validate();
  const double r = p.rmax_over_lambda;
  if (r == 0.0)
    throw DegenerateError("radial_error_pdf: r_max = 0 is a point mass at the origin");
  const double t = std::fabs(v) / r;
  if (t > 1.0)
    return 0.0;
  return (std::log1p(std::sqrt(std::max(0.0, 1.0 - t * t))) - std::log(t)) / (pi * r);
}

double attenuation_radial(const OpenLoopParams &p, const QuadratureSpec &quad)
{
  p.validate();
  return specfun::hyp1f2_radial(pi * p.rmax_over_lambda, quad);
}

double attenuation_angle(double phi, const OpenLoopParams &p, double r_tilde, const QuadratureSpec &quad)
{
  p.validate();
  if (!(std::fabs(phi) <= pi))
    throw DomainError("attenuation_angle: phi must satisfy |phi| <= pi");
  if (p.psi_max == 0.0)
    return specfun::j1_ratio(alpha(phi, r_tilde));
  const double k = 4.0 * pi * r_tilde;
  const int panels = 1 + static_cast<int>(std::ceil(2.0 * r_tilde * p.psi_max));
  const auto r = integrate([&](double d) { return specfun::j1_ratio(k * std::sin(0.5 * (phi - d))); }, -p.psi_max,
                           p.psi_max, quad, panels);
  return r.value / (2.0 * p.psi_max);
}

double apsi_mainbeam_approx(double phi, const OpenLoopParams &p, double r_tilde)
{
  p.validate();
  if (p.psi_max == 0.0)
    return specfun::j1_ratio(alpha(phi, r_tilde));
  const double w = phi / p.psi_max;
  return 0.5 * (1.0 + w) * specfun::hyp1f2_angle(pi * r_tilde * std::fabs(phi + p.psi_max)) +
         0.5 * (1.0 - w) * specfun::hyp1f2_angle(pi * r_tilde * std::fabs(phi - p.psi_max));
}

double apsi_mainbeam_swapped(double phi, const OpenLoopParams &p, double r_tilde)
{
  p.validate();
  if (p.psi_max == 0.0)
    return specfun::j1_ratio(alpha(phi, r_tilde));
  const double w = phi / p.psi_max;
  return 0.5 * (1.0 - w) * specfun::hyp1f2_angle(pi * r_tilde * std::fabs(phi + p.psi_max)) +
         0.5 * (1.0 + w) * specfun::hyp1f2_angle(pi * r_tilde * std::fabs(phi - p.psi_max));
}

double avg_pattern_open_loop(std::size_t n_nodes, double r_tilde, double phi, const OpenLoopParams &p,
                             const QuadratureSpec &quad)
{
  if (n_nodes < 1)
    throw DomainError("avg_pattern_open_loop: n_nodes must be at least 1");
  const double n = static_cast<double>(n_nodes);
  const double a_psi = attenuation_angle(phi, p, r_tilde, quad);
  const double a_r = attenuation_radial(p, quad);
  return 1.0 / n + (1.0 - 1.0 / n) * a_psi * a_psi * a_r * a_r;
}

double avg_pattern_impaired(std::size_t n_nodes, double r_tilde, double phi, const ImpairmentParams &p,
                            const QuadratureSpec &quad)
{
  if (p.kind == ImpairmentKind::closed_loop)
    return avg_pattern_closed_loop(n_nodes, r_tilde, phi, p.closed_loop);
  return avg_pattern_open_loop(n_nodes, r_tilde, phi, p.open_loop, quad);
}

namespace
{

// Per-node phase offsets independent of the look angle, plus the geometry
// used for the angle-dependent part 2 pi r_tilde (x cos phi + y sin phi).
struct ImpairedArray
{
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> offset;
};

ImpairedArray draw_impaired(const ArrayConfig &cfg, const ImpairmentParams &p, std::size_t trial)
{
  const auto nodes = sample_realization(cfg, trial);
  const std::size_t n = nodes.size();
  const double k = 2.0 * pi * cfg.r_tilde;
  ImpairedArray a;
  a.x.resize(n);
  a.y.resize(n);
  a.offset.resize(n);
  for (std::size_t i = 0; i < n; ++i)
  {
    a.x[i] = nodes.radii[i] * std::cos(nodes.angles[i]);
    a.y[i] = nodes.radii[i] * std::sin(nodes.angles[i]);
  }
  if (p.kind == ImpairmentKind::closed_loop)
  {
    StreamRng rng(cfg.seed, trial, StreamPurpose::phase_noise);
    for (std::size_t i = 0; i < n; ++i)
      a.offset[i] = k * a.x[i] + sample_tikhonov(p.closed_loop, rng);
  }
  else
  {
    StreamRng rng(cfg.seed, trial, StreamPurpose::location_error);
    const double rmax = p.open_loop.rmax_over_lambda;
    const double psi_max = p.open_loop.psi_max;
    for (std::size_t i = 0; i < n; ++i)
    {
      const double dr = rng.uniform(-rmax, rmax);
      const double dpsi = rng.uniform(-psi_max, psi_max);
      a.offset[i] = 2.0 * pi * (cfg.r_tilde * nodes.radii[i] + dr) * std::cos(nodes.angles[i] + dpsi);
    }
  }
  return a;
}

double impaired_power(const ImpairedArray &a, double phi, double r_tilde)
{
  const double k = 2.0 * pi * r_tilde;
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  double re = 0.0;
  double im = 0.0;
  for (std::size_t i = 0; i < a.x.size(); ++i)
  {
    const double arg = a.offset[i] - k * (a.x[i] * c + a.y[i] * s);
    re += std::cos(arg);
    im += std::sin(arg);
  }
  const double inv = 1.0 / static_cast<double>(a.x.size());
  return (re * re + im * im) * inv * inv;
}

} // namespace

PatternCurve mc_impaired_pattern(const ArrayConfig &cfg, std::span<const double> grid, const ImpairmentParams &p,
                                 std::size_t n_trials, const Workers &workers)
{
  cfg.validate();
  if (p.kind == ImpairmentKind::closed_loop)
    p.closed_loop.validate();
  else
    p.open_loop.validate();
  if (n_trials < 100)
    throw DomainError("mc_impaired_pattern: at least 100 trials are required");
  for (double phi : grid)
    if (!(std::fabs(phi) <= pi))
      throw DomainError("mc_impaired_pattern: grid angles must satisfy |phi| <= pi");

  using Acc = std::vector<MeanAccumulator>;
  auto partial = run_trial_blocks<Acc>(
      n_trials, workers, [&] { return Acc(grid.size()); },
      [&](Acc &acc, std::size_t trial) {
        const auto a = draw_impaired(cfg, p, trial);
        for (std::size_t i = 0; i < grid.size(); ++i)
          acc[i].add(impaired_power(a, grid[i], cfg.r_tilde));
      });
  Acc total(grid.size());
  for (const auto &block : partial)
    for (std::size_t i = 0; i < grid.size(); ++i)
      total[i].merge(block[i]);

  PatternCurve curve;
  curve.label = p.kind == ImpairmentKind::closed_loop ? "closed-loop-monte-carlo" : "open-loop-monte-carlo";
  curve.angles.assign(grid.begin(), grid.end());
  for (const auto &acc : total)
  {
    const auto est = acc.estimate();
    curve.power.push_back(est.mean);
    curve.std_error.push_back(est.std_error);
  }
  return curve;
}

} // namespace beamnet
