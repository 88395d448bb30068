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

#include "beamnet/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "beamnet/error.hpp"

namespace beamnet::specfun
{

namespace
{

using std::numbers::pi;

// Below this the ascending series (summed in extended precision) is used,
// above it the Hankel expansion. At the crossover both are better than 1e-13.
constexpr double kBesselSeriesLimit = 17.0;
constexpr double kScaledISeriesLimit = 30.0;

void require_finite(double x, const char *fn)
{
  if (!std::isfinite(x))
    throw DomainError(std::string(fn) + ": non-finite argument");
}

// J_order(x) for order 0 or 1 by the ascending series.
double bessel_j_series(int order, double x)
{
  const long double half = 0.5L * x;
  const long double q = -half * half;
  long double term = (order == 0) ? 1.0L : half;
  long double sum = term;
  for (int k = 1; k < 200; ++k)
  {
    term *= q / (static_cast<long double>(k) * (k + order));
    sum += term;
    if (k > std::fabs(half) && std::fabs(term) < 1e-21L)
      break;
  }
  return static_cast<double>(sum);
}

// Hankel asymptotic expansion for x > 0, order 0 or 1.
double bessel_j_hankel(int order, double x)
{
  const double mu = 4.0 * order * order;
  const double y = 8.0 * x;
  double p = 1.0;
  double q = 0.0;
  double a = 1.0;
  for (int k = 1; k < 80; ++k)
  {
    const double odd = 2.0 * k - 1.0;
    const double next = a * (mu - odd * odd) / (k * y);
    if (std::fabs(next) >= std::fabs(a))
      break; // smallest term reached
    a = next;
    const double sign = ((k / 2) % 2 == 0) ? 1.0 : -1.0;
    if (k % 2 == 0)
      p += sign * a;
    else
      q += sign * a;
    if (std::fabs(a) < 1e-17)
      break;
  }
  const double s = std::sin(x);
  const double c = std::cos(x);
  double cos_chi;
  double sin_chi;
  if (order == 0)
  {
    cos_chi = (c + s) / std::numbers::sqrt2;
    sin_chi = (s - c) / std::numbers::sqrt2;
  }
  else
  {
    cos_chi = (s - c) / std::numbers::sqrt2;
    sin_chi = -(s + c) / std::numbers::sqrt2;
  }
  return std::sqrt(2.0 / (pi * x)) * (p * cos_chi - q * sin_chi);
}

// exp(-x) I_order(x) by the ascending series, x >= 0.
double bessel_i_scaled_series(int order, double x)
{
  const long double half = 0.5L * x;
  const long double q = half * half;
  long double term = (order == 0) ? 1.0L : half;
  long double sum = term;
  for (int k = 1; k < 400; ++k)
  {
    term *= q / (static_cast<long double>(k) * (k + order));
    sum += term;
    if (term < 1e-20L * sum)
      break;
  }
  return static_cast<double>(sum * std::exp(-static_cast<long double>(x)));
}

// exp(-x) I_order(x) by the large-argument expansion.
double bessel_i_scaled_asymptotic(int order, double x)
{
  const double mu = 4.0 * order * order;
  double sum = 1.0;
  double a = 1.0;
  for (int k = 1; k < 80; ++k)
  {
    const double odd = 2.0 * k - 1.0;
    const double next = -a * (mu - odd * odd) / (k * 8.0 * x);
    if (std::fabs(next) >= std::fabs(a))
      break;
    a = next;
    sum += a;
    if (std::fabs(a) < 1e-17)
      break;
  }
  return sum / std::sqrt(2.0 * pi * x);
}

double bessel_i_scaled(int order, double x)
{
  return (x <= kScaledISeriesLimit) ? bessel_i_scaled_series(order, x) : bessel_i_scaled_asymptotic(order, x);
}

// Marcum Q through the Neumann series of scaled Bessel terms, valid for a*b <= 300.
double marcum_q1_series(double a, double b)
{
  const double x = a * b;
  const bool lower = a < b;
  const double ratio = lower ? a / b : b / a;

  // I_k / I_{k-1} from the continued fraction, run backwards from a safe start.
  const int kmax = static_cast<int>(x + std::sqrt(80.0 * (x + 1.0))) + 60;
  std::vector<double> r(static_cast<std::size_t>(kmax) + 2, 0.0);
  for (int k = kmax; k >= 1; --k)
    r[static_cast<std::size_t>(k)] = 1.0 / (2.0 * k / x + r[static_cast<std::size_t>(k) + 1]);

  double scaled_ik = bessel_i0_scaled(x);
  double power = 1.0;
  double sum = lower ? scaled_ik : 0.0;
  for (int k = 1; k <= kmax; ++k)
  {
    scaled_ik *= r[static_cast<std::size_t>(k)];
    power *= ratio;
    const double term = power * scaled_ik;
    sum += term;
    if (k > x && term < 1e-18)
      break;
  }
  const double weight = std::exp(-0.5 * (a - b) * (a - b));
  const double q = lower ? weight * sum : 1.0 - weight * sum;
  return std::clamp(q, 0.0, 1.0);
}

// Marcum Q by integrating the Rice density, used when a*b is large.
double marcum_q1_integral(double a, double b)
{
  auto rice = [a](double t) { return t * std::exp(-0.5 * (t - a) * (t - a)) * bessel_i0_scaled(a * t); };
  const QuadratureSpec spec{1e-14, 1e-12, 400};
  constexpr double kTail = 40.0;
  if (b >= a)
    return std::clamp(integrate(rice, b, b + kTail, spec, 4).value, 0.0, 1.0);
  const double lo = std::max(0.0, a - kTail);
  return std::clamp(1.0 - integrate(rice, lo, b, spec, 4).value, 0.0, 1.0);
}

} // namespace

double bessel_j0(double x)
{
  require_finite(x, "bessel_j0");
  const double ax = std::fabs(x);
  return (ax <= kBesselSeriesLimit) ? bessel_j_series(0, ax) : bessel_j_hankel(0, ax);
}

double bessel_j1(double x)
{
  require_finite(x, "bessel_j1");
  const double ax = std::fabs(x);
  const double v = (ax <= kBesselSeriesLimit) ? bessel_j_series(1, ax) : bessel_j_hankel(1, ax);
  return (x < 0.0) ? -v : v;
}

double j1_ratio(double x)
{
  require_finite(x, "j1_ratio");
  const double ax = std::fabs(x);
  if (ax > kBesselSeriesLimit)
    return 2.0 * bessel_j_hankel(1, ax) / ax;

  // sum_k (-x^2/4)^k / (k! (k+1)!)
  const long double q = -0.25L * ax * ax;
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int k = 1; k < 200; ++k)
  {
    term *= q / (static_cast<long double>(k) * (k + 1));
    sum += term;
    if (k > 0.5 * ax && std::fabs(term) < 1e-21L)
      break;
  }
  return static_cast<double>(sum);
}

double bessel_i0_scaled(double x)
{
  require_finite(x, "bessel_i0_scaled");
  if (x < 0.0)
    throw DomainError("bessel_i0_scaled: negative argument");
  return bessel_i_scaled(0, x);
}

double bessel_i1_scaled(double x)
{
  require_finite(x, "bessel_i1_scaled");
  if (x < 0.0)
    throw DomainError("bessel_i1_scaled: negative argument");
  return bessel_i_scaled(1, x);
}

double bessel_i_ratio(double rho)
{
  require_finite(rho, "bessel_i_ratio");
  if (rho < 0.0)
    throw DomainError("bessel_i_ratio: rho must be non-negative");
  if (rho == 0.0)
    return 0.0;
  return bessel_i_scaled(1, rho) / bessel_i_scaled(0, rho);
}

double marcum_q1(double a, double b)
{
  require_finite(a, "marcum_q1");
  require_finite(b, "marcum_q1");
  if (a < 0.0 || b < 0.0)
    throw DomainError("marcum_q1: arguments must be non-negative");
  if (b == 0.0)
    return 1.0;
  if (a == 0.0)
    return std::exp(-0.5 * b * b);
  if (a * b > 300.0)
    return marcum_q1_integral(a, b);
  return marcum_q1_series(a, b);
}

double hyp2f3_sidelobe(double x, const QuadratureSpec &quad)
{
  require_finite(x, "hyp2f3_sidelobe");
  if (x < 0.0)
    throw DomainError("hyp2f3_sidelobe: x must be non-negative");
  if (x == 0.0)
    return 1.0;
  auto integrand = [x](double theta) {
    const double g = j1_ratio(x * std::sin(0.5 * theta));
    return g * g;
  };
  const int panels = 1 + static_cast<int>(x / 4.0);
  return integrate(integrand, 0.0, pi, quad, panels).value / pi;
}

double hyp1f2_radial(double x, const QuadratureSpec &quad)
{
  require_finite(x, "hyp1f2_radial");
  if (x < 0.0)
    throw DomainError("hyp1f2_radial: x must be non-negative");
  if (x == 0.0)
    return 1.0;

  // Inner piece t in (0, 0.01] with t = exp(-s) removes the log singularity;
  // outer piece uses t = sin(theta) to absorb the square root at t = 1.
  constexpr double kSplit = 0.01;
  auto inner = [x](double s) {
    const double t = std::exp(-s);
    return std::cos(2.0 * x * t) * (std::log1p(std::sqrt(1.0 - t * t)) + s) * t;
  };
  auto outer = [x](double theta) {
    return std::cos(2.0 * x * std::sin(theta)) * std::log(1.0 / std::tan(0.5 * theta)) * std::cos(theta);
  };
  const double s_lo = -std::log(kSplit);
  const double inner_part = integrate(inner, s_lo, s_lo + 40.0, quad, 4).value;
  const int panels = 1 + static_cast<int>(x / 2.0);
  const double outer_part = integrate(outer, std::asin(kSplit), 0.5 * pi, quad, panels).value;
  return 2.0 / pi * (inner_part + outer_part);
}

double hyp1f2_angle(double x, const QuadratureSpec &quad)
{
  require_finite(x, "hyp1f2_angle");
  if (x < 0.0)
    throw DomainError("hyp1f2_angle: x must be non-negative");
  if (x == 0.0)
    return 1.0;
  const int panels = 1 + static_cast<int>(x / 2.0);
  return integrate([x](double s) { return j1_ratio(2.0 * x * s); }, 0.0, 1.0, quad, panels).value;
}

} // namespace beamnet::specfun
