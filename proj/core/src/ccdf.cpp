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

#include "beamnet/ccdf.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "beamnet/average_pattern.hpp"
#include "beamnet/error.hpp"
#include "beamnet/specfun.hpp"
#include "beamnet/stats.hpp"
#include "fft2d.hpp"

namespace beamnet
{

using std::numbers::pi;

const char *to_string(CcdfMethod method) noexcept
{
  switch (method)
  {
  case CcdfMethod::exact_cf:
    return "exact-cf";
  case CcdfMethod::precise_gaussian:
    return "precise-gaussian";
  case CcdfMethod::marcum:
    return "marcum";
  case CcdfMethod::rayleigh:
    return "rayleigh";
  case CcdfMethod::monte_carlo:
    return "monte-carlo";
  }
  return "unknown";
}

namespace
{

void require_nodes(std::size_t n_nodes)
{
  if (n_nodes < 1)
    throw DomainError("ccdf: n_nodes must be at least 1");
}

std::complex<double> ipow(std::complex<double> base, std::size_t n)
{
  std::complex<double> result{1.0, 0.0};
  while (n > 0)
  {
    if (n & 1U)
      result *= base;
    base *= base;
    n >>= 1U;
  }
  return result;
}

// With z = sin t the CF becomes (4/pi) int_0^{pi/2} cos^2 t e^{j omega cos(a sin t)} cos(nu sin(a sin t)) dt.
std::complex<double> cf_integrand(double t, double omega, double nu, double a)
{
  const double u = a * std::sin(t);
  const double c = std::cos(t);
  return c * c * std::cos(nu * std::sin(u)) * std::polar(1.0, omega * std::cos(u));
}

std::complex<double> cf_fixed(double omega, double nu, double a, int panels)
{
  return (4.0 / pi) *
         integrate_fixed([&](double t) { return cf_integrand(t, omega, nu, a); }, 0.0, 0.5 * pi, panels);
}

// Quadrant omega_k = k pi / L, nu_l = l pi / L for k, l in [0, half], built as
// a sum of rank-one terms over the quadrature nodes.
std::vector<std::complex<double>> cf_quadrant(std::size_t half, double step, double a, int panels,
                                              const Workers &workers)
{
  const auto &rule = gauss_legendre20();
  const std::size_t q = rule.nodes.size() * static_cast<std::size_t>(panels);
  std::vector<double> cos_u(q);
  std::vector<double> sin_u(q);
  std::vector<double> weight(q);
  const double width = 0.5 * pi / panels;
  for (int p = 0; p < panels; ++p)
  {
    const double center = (p + 0.5) * width;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    {
      const std::size_t idx = static_cast<std::size_t>(p) * rule.nodes.size() + i;
      const double t = center + 0.5 * width * rule.nodes[i];
      const double u = a * std::sin(t);
      cos_u[idx] = std::cos(u);
      sin_u[idx] = std::sin(u);
      weight[idx] = (4.0 / pi) * 0.5 * width * rule.weights[i] * std::cos(t) * std::cos(t);
    }
  }

  const std::size_t side = half + 1;
  std::vector<std::complex<double>> out(side * side);
  // Rank-one updates over the nodes, with rows split into chunks owned by one worker each.
  constexpr std::size_t chunk = 64;
  const std::size_t chunks = (side + chunk - 1) / chunk;
  parallel_for(chunks, workers, [&](std::size_t c) {
    const std::size_t k0 = c * chunk;
    const std::size_t k1 = std::min(side, k0 + chunk);
    std::vector<double> re((k1 - k0) * side, 0.0);
    std::vector<double> im((k1 - k0) * side, 0.0);
    std::vector<double> cos_nu(side);
    for (std::size_t i = 0; i < q; ++i)
    {
      for (std::size_t l = 0; l < side; ++l)
        cos_nu[l] = std::cos(step * static_cast<double>(l) * sin_u[i]);
      for (std::size_t k = k0; k < k1; ++k)
      {
        const double arg = step * static_cast<double>(k) * cos_u[i];
        const double wr = weight[i] * std::cos(arg);
        const double wi = weight[i] * std::sin(arg);
        double *pr = &re[(k - k0) * side];
        double *pi_ = &im[(k - k0) * side];
        for (std::size_t l = 0; l < side; ++l)
        {
          pr[l] += wr * cos_nu[l];
          pi_[l] += wi * cos_nu[l];
        }
      }
    }
    for (std::size_t k = k0; k < k1; ++k)
      for (std::size_t l = 0; l < side; ++l)
        out[k * side + l] = {re[(k - k0) * side + l], im[(k - k0) * side + l]};
  });
  return out;
}

int choose_panels(double omega_max, double a, double tol)
{
  // Phase of the integrand moves at most (omega + nu) a across [0, pi/2]; a
  // Gauss-Legendre panel of order 20 resolves a few radians of it.
  int panels = 4 + static_cast<int>(std::ceil(2.0 * omega_max * a * 0.5 * pi / 4.0));
  const double probes[][2] = {{1.0, 1.0}, {1.0, 0.0}, {0.0, 1.0}, {0.5, 0.5}, {0.25, 0.75}};
  for (int attempt = 0; attempt < 6; ++attempt)
  {
    double worst = 0.0;
    for (const auto &pr : probes)
    {
      const double w = pr[0] * omega_max;
      const double v = pr[1] * omega_max;
      worst = std::max(worst, std::abs(cf_fixed(w, v, a, panels) - cf_fixed(w, v, a, 2 * panels)));
    }
    if (worst <= tol)
      return panels;
    panels *= 2;
  }
  throw NumericError("exact_ccdf: characteristic function quadrature did not settle", tol);
}

double bilinear(const JointDensity &d, double x, double y)
{
  const auto g = static_cast<long>(d.grid_size);
  const double fx = (x + d.half_width) / d.spacing;
  const double fy = (y + d.half_width) / d.spacing;
  const double ix = std::floor(fx);
  const double iy = std::floor(fy);
  const double tx = fx - ix;
  const double ty = fy - iy;
  auto wrap = [g](long i) { return static_cast<std::size_t>(((i % g) + g) % g); };
  const std::size_t x0 = wrap(static_cast<long>(ix));
  const std::size_t x1 = wrap(static_cast<long>(ix) + 1);
  const std::size_t y0 = wrap(static_cast<long>(iy));
  const std::size_t y1 = wrap(static_cast<long>(iy) + 1);
  const std::size_t n = d.grid_size;
  return (1.0 - tx) * ((1.0 - ty) * d.values[x0 * n + y0] + ty * d.values[x0 * n + y1]) +
         tx * ((1.0 - ty) * d.values[x1 * n + y0] + ty * d.values[x1 * n + y1]);
}

CcdfCurve step_at_one(std::span<const double> thresholds, CcdfMethod method)
{
  CcdfCurve curve;
  curve.method = method;
  curve.thresholds.assign(thresholds.begin(), thresholds.end());
  for (double p0 : thresholds)
    curve.probs.push_back(p0 < 1.0 ? 1.0 : 0.0);
  return curve;
}

} // namespace

std::complex<double> joint_cf(double omega, double nu, double alpha, const QuadratureSpec &quad)
{
  if (!std::isfinite(omega) || !std::isfinite(nu) || !std::isfinite(alpha))
    throw DomainError("joint_cf: arguments must be finite");
  const double spread = (std::fabs(omega) + std::fabs(nu)) * std::fabs(alpha) + std::fabs(alpha);
  const int panels = 1 + static_cast<int>(std::ceil(spread / 8.0));
  const auto r =
      integrate([&](double t) { return cf_integrand(t, omega, nu, alpha); }, 0.0, 0.5 * pi, quad, panels);
  return (4.0 / pi) * r.value;
}

double JointDensity::total_mass() const
{
  double sum = 0.0;
  for (double v : values)
    sum += v;
  return sum * spacing * spacing;
}

JointDensity exact_joint_density(std::size_t n_nodes, double alpha, std::size_t grid_size,
                                 const QuadratureSpec &quad, const Workers &workers)
{
  require_nodes(n_nodes);
  quad.validate();
  if (grid_size < 256 || (grid_size & (grid_size - 1)) != 0)
    throw DomainError("exact_ccdf: grid_size must be a power of two of at least 256");
  if (!std::isfinite(alpha))
    throw DomainError("exact_ccdf: alpha must be finite");
  alpha = std::fabs(alpha);

  const double n = static_cast<double>(n_nodes);
  const std::size_t g = grid_size;
  const std::size_t half = g / 2;

  JointDensity d;
  d.grid_size = g;
  d.half_width = n * (1.0 + 1.0 / 8.0);
  d.spacing = 2.0 * d.half_width / static_cast<double>(g);
  const double step = pi / d.half_width;

  const int panels = choose_panels(step * static_cast<double>(half), alpha, quad.abs_tol);
  const auto quadrant = cf_quadrant(half, step, alpha, panels, workers);
  const std::size_t side = half + 1;

  // Phi(omega, -nu) = Phi(omega, nu) and Phi(-omega, nu) = conj Phi(omega, nu).
  std::vector<std::complex<double>> spec(g * g);
  for (std::size_t row = 0; row < g; ++row)
  {
    const long k = row < half ? static_cast<long>(row) : static_cast<long>(row) - static_cast<long>(g);
    const std::size_t ka = static_cast<std::size_t>(std::labs(k));
    for (std::size_t col = 0; col < g; ++col)
    {
      const long l = col < half ? static_cast<long>(col) : static_cast<long>(col) - static_cast<long>(g);
      const std::size_t la = static_cast<std::size_t>(std::labs(l));
      std::complex<double> phi = quadrant[ka * side + la];
      if (k < 0)
        phi = std::conj(phi);
      phi = ipow(phi, n_nodes);
      if ((k + l) % 2 != 0)
        phi = -phi;
      spec[row * g + col] = phi;
    }
  }

  detail::fft2d_forward(spec, g);

  const double scale = 1.0 / (4.0 * d.half_width * d.half_width);
  d.values.resize(g * g);
  double pad = 0.0;
  for (std::size_t m = 0; m < g; ++m)
  {
    const bool outside_x = std::fabs(d.coordinate(m)) > n;
    for (std::size_t j = 0; j < g; ++j)
    {
      const double v = spec[m * g + j].real() * scale;
      d.values[m * g + j] = v;
      if (outside_x || std::fabs(d.coordinate(j)) > n)
        pad += std::fabs(v);
    }
  }
  d.pad_mass = pad * d.spacing * d.spacing;
  if (d.pad_mass > kAliasingTolerance)
    throw ResolutionError("exact_ccdf: density leaks outside [-N, N]^2; increase grid_size", d.pad_mass);
  return d;
}

CcdfCurve exact_ccdf(std::size_t n_nodes, double alpha, std::span<const double> thresholds, std::size_t grid_size,
                     const QuadratureSpec &quad, const Workers &workers)
{
  require_nodes(n_nodes);
  if (n_nodes == 1 || alpha == 0.0)
    return step_at_one(thresholds, CcdfMethod::exact_cf);

  const auto d = exact_joint_density(n_nodes, alpha, grid_size, quad, workers);
  const double n = static_cast<double>(n_nodes);

  // Angular integral g(r) = r int f(r cos t, r sin t) dt on radii r_i = i h.
  const double h = 0.5 * d.spacing;
  const auto count = static_cast<std::size_t>(std::floor(d.half_width / h));
  std::vector<double> profile(count + 1, 0.0);
  parallel_for(count + 1, workers, [&](std::size_t i) {
    const double r = h * static_cast<double>(i);
    if (r == 0.0)
      return;
    const auto m = std::max<std::size_t>(16, static_cast<std::size_t>(std::ceil(2.0 * pi * r / h)));
    double sum = 0.0;
    for (std::size_t j = 0; j < m; ++j)
    {
      const double t = 2.0 * pi * static_cast<double>(j) / static_cast<double>(m);
      sum += bilinear(d, r * std::cos(t), r * std::sin(t));
    }
    profile[i] = std::max(0.0, r * sum * 2.0 * pi / static_cast<double>(m));
  });

  // tail[i] = int_{r_i}^{r_count} g(r) dr, accumulated from the outside in.
  std::vector<double> tail(count + 1, 0.0);
  for (std::size_t i = count; i-- > 0;)
    tail[i] = tail[i + 1] + 0.5 * h * (profile[i] + profile[i + 1]);

  CcdfCurve curve;
  curve.method = CcdfMethod::exact_cf;
  curve.thresholds.assign(thresholds.begin(), thresholds.end());
  for (double p0 : thresholds)
  {
    double prob = 0.0;
    if (p0 <= 0.0)
      prob = 1.0;
    else if (p0 >= 1.0)
      prob = 0.0;
    else
    {
      const double rho = n * std::sqrt(p0);
      const auto i = static_cast<std::size_t>(std::floor(rho / h));
      if (i >= count)
        prob = 0.0;
      else
      {
        const double frac = rho / h - static_cast<double>(i);
        const double g_rho = (1.0 - frac) * profile[i] + frac * profile[i + 1];
        prob = tail[i + 1] + 0.5 * (1.0 - frac) * h * (g_rho + profile[i + 1]);
      }
    }
    curve.probs.push_back(std::clamp(prob, 0.0, 1.0));
  }
  return curve;
}

GaussianMoments gaussian_moments(std::size_t n_nodes, double alpha)
{
  require_nodes(n_nodes);
  if (!(alpha >= 0.0) || !std::isfinite(alpha))
    throw DomainError("gaussian_moments: alpha must be finite and non-negative");
  GaussianMoments mom;
  mom.alpha = alpha;
  mom.n_nodes = n_nodes;
  const double g = specfun::j1_ratio(alpha);
  mom.m_x = g * std::sqrt(static_cast<double>(n_nodes));
  if (alpha == 0.0)
    return mom;
  const double g2 = specfun::j1_ratio(2.0 * alpha);
  mom.var_x = std::max(0.0, 0.5 * (1.0 + g2) - g * g);
  mom.var_y = std::max(0.0, 0.5 * (1.0 - g2));
  return mom;
}

CcdfCurve ccdf_precise_gaussian(const GaussianMoments &mom, std::span<const double> thresholds,
                                const QuadratureSpec &quad)
{
  if (!(mom.var_x > 0.0) || !(mom.var_y > 0.0))
    throw DomainError("ccdf_precise_gaussian: both variances must be positive");
  const double sx2 = mom.var_x;
  const double sy2 = mom.var_y;
  const double mx = mom.m_x;
  const double n = static_cast<double>(mom.n_nodes);
  const double pref = 1.0 / (4.0 * pi * std::sqrt(sx2 * sy2));
  const double mean_term = mx * mx / (2.0 * sx2);

  CcdfCurve curve;
  curve.method = CcdfMethod::precise_gaussian;
  curve.thresholds.assign(thresholds.begin(), thresholds.end());
  for (double p0 : thresholds)
  {
    if (p0 <= 0.0)
    {
      curve.probs.push_back(1.0);
      continue;
    }
    const double radius = std::sqrt(n * p0);
    auto integrand = [&](double w) {
      const double c = std::cos(w);
      const double s = std::sin(w);
      const double u2 = c * c / (2.0 * sx2) + s * s / (2.0 * sy2);
      const double u = std::sqrt(u2);
      const double v = mx * c / (2.0 * sx2 * u);
      const double wv = radius * u - v;
      // v^2 <= m_x^2 / (2 var_x), so neither exponent below is positive.
      const double base = v * v - mean_term;
      return pref / u2 * (std::sqrt(pi) * v * std::exp(base) * std::erfc(wv) + std::exp(base - wv * wv));
    };
    const auto r = integrate(integrand, 0.0, pi, quad, 8);
    curve.probs.push_back(std::clamp(2.0 * r.value, 0.0, 1.0));
  }
  return curve;
}

CcdfCurve ccdf_marcum(const GaussianMoments &mom, std::span<const double> thresholds)
{
  const double n = static_cast<double>(mom.n_nodes);
  CcdfCurve curve;
  curve.method = CcdfMethod::marcum;
  curve.thresholds.assign(thresholds.begin(), thresholds.end());
  for (double p0 : thresholds)
    curve.probs.push_back(p0 <= 0.0 ? 1.0 : specfun::marcum_q1(std::sqrt(2.0) * std::fabs(mom.m_x), std::sqrt(2.0 * n * p0)));
  return curve;
}

CcdfCurve ccdf_rayleigh(std::size_t n_nodes, std::span<const double> thresholds)
{
  require_nodes(n_nodes);
  const double n = static_cast<double>(n_nodes);
  CcdfCurve curve;
  curve.method = CcdfMethod::rayleigh;
  curve.thresholds.assign(thresholds.begin(), thresholds.end());
  for (double p0 : thresholds)
    curve.probs.push_back(p0 <= 0.0 ? 1.0 : std::exp(-n * p0));
  return curve;
}

CcdfCurve mc_ccdf(const ArrayConfig &cfg, double phi, std::span<const double> thresholds, std::size_t n_trials,
                  const Workers &workers)
{
  if (n_trials < 100)
    throw DomainError("mc_ccdf: at least 100 trials are required");
  const auto samples = mc_pattern_samples(cfg, phi, n_trials, workers);
  CcdfCurve curve;
  curve.method = CcdfMethod::monte_carlo;
  curve.thresholds.assign(thresholds.begin(), thresholds.end());
  for (double p0 : thresholds)
  {
    const auto hits = std::count_if(samples.begin(), samples.end(), [p0](double p) { return p > p0; });
    const double prob = static_cast<double>(hits) / static_cast<double>(n_trials);
    curve.probs.push_back(prob);
    curve.std_errors.push_back(binomial_std_error(prob, n_trials));
  }
  return curve;
}

ZeroMeanBound zero_mean_bound(std::size_t n_nodes, double r_tilde, double phi)
{
  const auto region = sidelobe_region(n_nodes, r_tilde);
  if (!region.contains(phi))
    throw RegionError("zero_mean_bound: look angle lies outside the 3 dB sidelobe region");
  const double n = static_cast<double>(n_nodes);
  const double g = specfun::j1_ratio(alpha(phi, r_tilde));
  return {n * g * g, 1.0 / (1.0 - 1.0 / n)};
}

} // namespace beamnet
