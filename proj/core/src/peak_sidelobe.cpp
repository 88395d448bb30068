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

#include "beamnet/peak_sidelobe.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "beamnet/error.hpp"
#include "beamnet/stats.hpp"
#include "fft2d.hpp"

namespace beamnet
{

using std::numbers::pi;

OutageQuery OutageQuery::from_normalized(std::size_t n_nodes, double r_tilde, double normalized_p0)
{
  if (n_nodes < 1)
    throw DomainError("OutageQuery: n_nodes must be at least 1");
  return {n_nodes, r_tilde, normalized_p0 / static_cast<double>(n_nodes)};
}

double sigma2_xprime(double r_tilde)
{
  return 2.0 * pi * pi * r_tilde * r_tilde;
}

double crossing_rate(double level_a, double r_tilde)
{
  return 2.0 * std::sqrt(pi) * r_tilde * level_a * std::exp(-level_a * level_a);
}

double mean_upcrossings(double level_a, const SidelobeRegion &region)
{
  if (!(level_a > 1.0 / std::sqrt(2.0)))
    throw RegimeError("mean_upcrossings: the level must exceed 1/sqrt(2)");
  const double span_u = 2.0 * (1.0 - std::sin(0.5 * region.phi_zero));
  return span_u * crossing_rate(level_a, region.r_tilde);
}

double outage_upper_bound(const OutageQuery &q, const SidelobeRegion &region)
{
  const double np0 = q.normalized_p0();
  if (!(np0 > 0.5))
    throw RegimeError("outage_upper_bound: requires N P0 > 1/2");
  return std::min(1.0, mean_upcrossings(std::sqrt(np0), region));
}

double outage_bound_simplified(double normalized_p0, double r_tilde)
{
  return 4.0 * std::sqrt(pi) * r_tilde * std::sqrt(normalized_p0) * std::exp(-normalized_p0);
}

double threshold_for_outage(double p_out, double r_tilde)
{
  if (!(p_out > 0.0 && p_out < 1.0))
    throw DomainError("threshold_for_outage: p_out must lie in (0, 1)");
  if (!(r_tilde > 0.0))
    throw DomainError("threshold_for_outage: r_tilde must be positive");
  // Root of log(bound) - log(p_out), decreasing on (1/2, inf).
  const double log_scale = std::log(4.0 * std::sqrt(pi) * r_tilde) - std::log(p_out);
  auto gap = [&](double x) { return log_scale + 0.5 * std::log(x) - x; };
  double lo = 0.5;
  if (!(gap(lo) > 0.0))
    throw RegimeError("threshold_for_outage: no threshold above 1/2 reaches this outage probability");
  double hi = 1.0;
  while (gap(hi) > 0.0)
    hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it)
  {
    const double mid = 0.5 * (lo + hi);
    (gap(mid) > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

namespace
{

std::size_t next_pow2(std::size_t v)
{
  std::size_t p = 1;
  while (p < v)
    p <<= 1;
  return p;
}

// Uniform grid phi_m = 2 pi m / G over the full circle at 16 pi R samples per radian.
std::size_t peak_grid_size(double r_tilde, const PeakSearchOptions &opt)
{
  if (!(opt.sampling_factor > 0.0))
    throw DomainError("peak search: sampling_factor must be positive");
  const double per_radian = 16.0 * pi * r_tilde * opt.sampling_factor;
  return next_pow2(std::max<std::size_t>(64, static_cast<std::size_t>(std::ceil(2.0 * pi * per_radian))));
}

std::size_t first_region_index(const SidelobeRegion &region, std::size_t g)
{
  return static_cast<std::size_t>(std::ceil(region.phi_zero * static_cast<double>(g) / (2.0 * pi)));
}

// The array factor sum_k exp(j 2 pi R (x_k cos phi + y_k sin phi) - j 2 pi R x_k) has
// Fourier coefficients J_n(2 pi R r_k) in phi, negligible for |n| beyond
// 2 pi R + 10 (2 pi R)^(1/3) + 20. It is sampled directly at K points and
// resampled exactly onto the dense grid by zero padding.
std::vector<std::complex<double>> dense_array_factor(const NodeCoordinates &nodes, double r_tilde, std::size_t g)
{
  const double b = 2.0 * pi * r_tilde;
  const auto band = static_cast<std::size_t>(std::ceil(b + 10.0 * std::cbrt(b) + 20.0));
  const std::size_t k = std::min(g, next_pow2(2 * band + 2));
  std::vector<std::complex<double>> coarse(k);
  for (std::size_t i = 0; i < k; ++i)
  {
    const double phi = 2.0 * pi * static_cast<double>(i) / static_cast<double>(k);
    const double s = std::sin(0.5 * phi);
    const double c = std::cos(0.5 * phi);
    const double a = 4.0 * pi * r_tilde * s;
    double re = 0.0;
    double im = 0.0;
    for (std::size_t n = 0; n < nodes.size(); ++n)
    {
      const double arg = a * (nodes.y[n] * c - nodes.x[n] * s);
      re += std::cos(arg);
      im += std::sin(arg);
    }
    coarse[i] = {re, im};
  }
  detail::fft1d(coarse, -1);
  std::vector<std::complex<double>> dense(g);
  const double scale = 1.0 / (static_cast<double>(k) * static_cast<double>(nodes.size()));
  for (std::size_t i = 0; i < k / 2; ++i)
  {
    dense[i] = coarse[i] * scale;
    dense[g - k / 2 + i] = coarse[k / 2 + i] * scale;
  }
  detail::fft1d(dense, 1);
  return dense;
}

} // namespace

std::size_t peak_samples_per_side(const SidelobeRegion &region, const PeakSearchOptions &opt)
{
  const std::size_t g = peak_grid_size(region.r_tilde, opt);
  const std::size_t first = first_region_index(region, g);
  return first > g / 2 ? 0 : g / 2 - first + 1;
}

double region_peak(const NodeCoordinates &nodes, const SidelobeRegion &region, const PeakSearchOptions &opt)
{
  const std::size_t g = peak_grid_size(region.r_tilde, opt);
  const std::size_t first = first_region_index(region, g);
  if (first > g / 2)
    throw RegionError("peak search: the sidelobe region contains no grid point");
  const auto f = dense_array_factor(nodes, region.r_tilde, g);
  std::vector<double> power(g);
  for (std::size_t m = 0; m < g; ++m)
    power[m] = std::norm(f[m]);

  // Grid indices first..g-first cover phi in [phi_zero, 2 pi - phi_zero].
  const std::size_t last = g - first;
  const double step = 2.0 * pi / static_cast<double>(g);
  double best = 0.0;
  for (std::size_t m = first; m <= last; ++m)
  {
    const double p = power[m % g];
    best = std::max(best, p);
    if (!opt.refine || m == first || m == last)
      continue;
    const double left = power[m - 1];
    const double right = power[(m + 1) % g];
    const double denom = left - 2.0 * p + right;
    if (p > left && p >= right && denom < 0.0)
    {
      // Vertex of the parabola through the three samples.
      double phi = step * (static_cast<double>(m) + 0.5 * (left - right) / denom);
      if (phi > pi)
        phi -= 2.0 * pi;
      if (region.contains(phi))
        best = std::max(best, pattern_power(nodes, phi, region.r_tilde));
    }
  }
  return best;
}

std::vector<double> mc_peak_maxima(const ArrayConfig &cfg, std::size_t n_trials, const PeakSearchOptions &opt,
                                   const Workers &workers)
{
  cfg.validate();
  const auto region = sidelobe_region(cfg.n_nodes, cfg.r_tilde);
  std::vector<double> maxima(n_trials);
  parallel_for(n_trials, workers, [&](std::size_t trial) {
    maxima[trial] = region_peak(to_cartesian(sample_realization(cfg, trial)), region, opt);
  });
  return maxima;
}

CcdfCurve peak_outage_from_maxima(std::span<const double> maxima, std::span<const double> thresholds)
{
  CcdfCurve curve;
  curve.method = CcdfMethod::monte_carlo;
  curve.thresholds.assign(thresholds.begin(), thresholds.end());
  const std::size_t n = maxima.size();
  for (double p0 : thresholds)
  {
    const auto hits = std::count_if(maxima.begin(), maxima.end(), [p0](double p) { return p > p0; });
    const double prob = n > 0 ? static_cast<double>(hits) / static_cast<double>(n) : 0.0;
    curve.probs.push_back(prob);
    curve.std_errors.push_back(binomial_std_error(prob, n));
  }
  return curve;
}

CcdfCurve mc_peak_outage(const ArrayConfig &cfg, std::span<const double> thresholds, std::size_t n_trials,
                         const PeakSearchOptions &opt, const Workers &workers)
{
  if (n_trials < 100)
    throw DomainError("mc_peak_outage: at least 100 trials are required");
  const auto maxima = mc_peak_maxima(cfg, n_trials, opt, workers);
  return peak_outage_from_maxima(maxima, thresholds);
}

} // namespace beamnet
