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

#include "beamnet/array_model.hpp"

#include <cmath>
#include <numbers>

#include "beamnet/error.hpp"
#include "beamnet/rng.hpp"
#include "beamnet/stats.hpp"

namespace beamnet
{

using std::numbers::pi;

namespace
{

void require_angle(double phi, const char *fn)
{
  if (!(std::fabs(phi) <= pi))
    throw DomainError(std::string(fn) + ": look angle must satisfy |phi| <= pi");
}

} // namespace

void ArrayConfig::validate() const
{
  if (n_nodes < 1)
    throw DomainError("ArrayConfig: n_nodes must be at least 1");
  if (!(r_tilde > 0.0) || !std::isfinite(r_tilde))
    throw DomainError("ArrayConfig: r_tilde must be positive and finite");
}

NodeRealization sample_realization(const ArrayConfig &cfg, std::uint64_t stream_index)
{
  cfg.validate();
  StreamRng rng(cfg.seed, stream_index, StreamPurpose::geometry);
  NodeRealization nodes;
  nodes.radii.resize(cfg.n_nodes);
  nodes.angles.resize(cfg.n_nodes);
  for (std::size_t k = 0; k < cfg.n_nodes; ++k)
  {
    nodes.radii[k] = std::sqrt(rng.uniform());
    nodes.angles[k] = rng.uniform(-pi, pi);
  }
  return nodes;
}

NodeCoordinates to_cartesian(const NodeRealization &nodes)
{
  NodeCoordinates out;
  out.x.resize(nodes.size());
  out.y.resize(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k)
  {
    out.x[k] = nodes.radii[k] * std::cos(nodes.angles[k]);
    out.y[k] = nodes.radii[k] * std::sin(nodes.angles[k]);
  }
  return out;
}

double alpha(double phi, double r_tilde)
{
  require_angle(phi, "alpha");
  return 4.0 * pi * r_tilde * std::sin(0.5 * phi);
}

std::vector<double> compound_z(const NodeRealization &nodes, double phi)
{
  require_angle(phi, "compound_z");
  std::vector<double> z(nodes.size());
  for (std::size_t k = 0; k < nodes.size(); ++k)
    z[k] = nodes.radii[k] * std::sin(nodes.angles[k] - 0.5 * phi);
  return z;
}

std::complex<double> array_factor_z(std::span<const double> z, double alpha_value)
{
  if (z.empty())
    return {0.0, 0.0};
  double re = 0.0;
  double im = 0.0;
  for (double zk : z)
  {
    re += std::cos(alpha_value * zk);
    im -= std::sin(alpha_value * zk);
  }
  const double n = static_cast<double>(z.size());
  return {re / n, im / n};
}

std::complex<double> array_factor(const NodeRealization &nodes, double phi, double r_tilde)
{
  const auto z = compound_z(nodes, phi);
  return array_factor_z(z, alpha(phi, r_tilde));
}

double pattern_power(const NodeCoordinates &nodes, double phi, double r_tilde)
{
  // z_k = y_k cos(phi/2) - x_k sin(phi/2)
  const double s = std::sin(0.5 * phi);
  const double c = std::cos(0.5 * phi);
  const double a = 4.0 * pi * r_tilde * s;
  double re = 0.0;
  double im = 0.0;
  const std::size_t n = nodes.size();
  for (std::size_t k = 0; k < n; ++k)
  {
    const double arg = a * (nodes.y[k] * c - nodes.x[k] * s);
    re += std::cos(arg);
    im += std::sin(arg);
  }
  const double inv = 1.0 / static_cast<double>(n);
  return (re * re + im * im) * inv * inv;
}

PatternCurve beampattern(const NodeRealization &nodes, std::span<const double> grid, double r_tilde)
{
  PatternCurve curve;
  curve.label = "realization";
  curve.angles.assign(grid.begin(), grid.end());
  curve.power.reserve(grid.size());
  for (double phi : grid)
    curve.power.push_back(std::norm(array_factor(nodes, phi, r_tilde)));
  return curve;
}

std::vector<double> uniform_grid(std::size_t count, double lo, double hi)
{
  if (count == 0)
    return {};
  if (count == 1)
    return {lo};
  std::vector<double> grid(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i)
    grid[i] = lo + step * static_cast<double>(i);
  grid.back() = hi;
  return grid;
}

std::size_t default_grid_size(double r_tilde)
{
  auto n = static_cast<std::size_t>(std::ceil(16.0 * pi * r_tilde));
  n = std::max<std::size_t>(n, 64);
  return (n % 2 == 0) ? n + 1 : n;
}

PatternCurve mc_mean_pattern(const ArrayConfig &cfg, std::span<const double> grid, std::size_t n_trials,
                             const Workers &workers)
{
  cfg.validate();
  for (double phi : grid)
    require_angle(phi, "mc_mean_pattern");

  using Acc = std::vector<MeanAccumulator>;
  auto partial = run_trial_blocks<Acc>(
      n_trials, workers, [&] { return Acc(grid.size()); },
      [&](Acc &acc, std::size_t trial) {
        const auto nodes = to_cartesian(sample_realization(cfg, trial));
        for (std::size_t i = 0; i < grid.size(); ++i)
          acc[i].add(pattern_power(nodes, grid[i], cfg.r_tilde));
      });

  Acc total(grid.size());
  for (const auto &block : partial)
    for (std::size_t i = 0; i < grid.size(); ++i)
      total[i].merge(block[i]);

  PatternCurve curve;
  curve.label = "monte-carlo-mean";
  curve.angles.assign(grid.begin(), grid.end());
  for (const auto &acc : total)
  {
    const auto est = acc.estimate();
    curve.power.push_back(est.mean);
    curve.std_error.push_back(est.std_error);
  }
  return curve;
}

std::vector<double> mc_pattern_samples(const ArrayConfig &cfg, double phi, std::size_t n_trials,
                                       const Workers &workers)
{
  cfg.validate();
  require_angle(phi, "mc_pattern_samples");
  std::vector<double> samples(n_trials);
  parallel_for(n_trials, workers, [&](std::size_t trial) {
    samples[trial] = pattern_power(to_cartesian(sample_realization(cfg, trial)), phi, cfg.r_tilde);
  });
  return samples;
}

} // namespace beamnet
