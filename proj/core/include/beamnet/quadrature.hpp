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

#include <algorithm>
#include <cmath>
#include <complex>
#include <span>
#include <type_traits>
#include <vector>

#include "beamnet/error.hpp"

namespace beamnet
{

struct QuadratureSpec
{
  double abs_tol = 1e-10;
  double rel_tol = 1e-9;
  int max_subdivisions = 200; // bisections allowed on top of the initial partition

  // Throws DomainError unless abs_tol > 0, rel_tol > 0 and max_subdivisions >= 1.
  void validate() const;
};

// Nodes and weights of a symmetric rule on [-1, 1], listed in ascending order.
struct QuadratureRule
{
  std::span<const double> nodes;
  std::span<const double> weights;
};

// 21-point Kronrod extension of the 10-point Gauss rule. gauss_weights is
// aligned with the Kronrod nodes and is zero on the Kronrod-only points.
struct GaussKronrodRule
{
  std::span<const double> nodes;
  std::span<const double> kronrod_weights;
  std::span<const double> gauss_weights;
};

const GaussKronrodRule &gauss_kronrod21();
const QuadratureRule &gauss_legendre20();

template <class T>
struct QuadratureResult
{
  T value{};
  double error = 0.0;
  int subdivisions = 0;
};

namespace detail
{

template <class T>
double magnitude(const T &v)
{
  return std::abs(v);
}

template <class T>
struct Panel
{
  double a;
  double b;
  T value;
  double error;
};

template <class T, class F>
Panel<T> gk21_panel(F &f, double a, double b)
{
  const auto &rule = gauss_kronrod21();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  T kronrod{};
  T gauss{};
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
  {
    const T y = f(center + half * rule.nodes[i]);
    kronrod += rule.kronrod_weights[i] * y;
    gauss += rule.gauss_weights[i] * y;
  }
  kronrod *= half;
  gauss *= half;
  return {a, b, kronrod, magnitude(kronrod - gauss)};
}

} // namespace detail

// Globally adaptive Gauss-Kronrod integration of f over [a, b]. The interval
// is first cut into initial_panels equal pieces (useful for oscillatory
// integrands), then the panel with the largest error estimate is bisected
// until the summed estimate meets max(abs_tol, rel_tol * |value|).
// Throws NumericError when max_subdivisions bisections do not suffice.
template <class F>
auto integrate(F &&f, double a, double b, const QuadratureSpec &spec = {}, int initial_panels = 1)
    -> QuadratureResult<std::decay_t<std::invoke_result_t<F &, double>>>
{
  using T = std::decay_t<std::invoke_result_t<F &, double>>;
  spec.validate();
  if (a == b)
    return {};
  initial_panels = std::max(initial_panels, 1);

  std::vector<detail::Panel<T>> panels;
  panels.reserve(static_cast<std::size_t>(initial_panels + spec.max_subdivisions + 1));
  const double width = (b - a) / initial_panels;
  for (int i = 0; i < initial_panels; ++i)
  {
    const double lo = a + i * width;
    const double hi = (i + 1 == initial_panels) ? b : a + (i + 1) * width;
    panels.push_back(detail::gk21_panel<T>(f, lo, hi));
  }

  auto totals = [&panels]() {
    T value{};
    double error = 0.0;
    for (const auto &p : panels)
    {
      value += p.value;
      error += p.error;
    }
    return std::pair{value, error};
  };

  int subdivisions = 0;
  for (;;)
  {
    const auto [value, error] = totals();
    const double target = std::max(spec.abs_tol, spec.rel_tol * detail::magnitude(value));
    if (error <= target)
      return {value, error, subdivisions};
    if (subdivisions >= spec.max_subdivisions)
      throw NumericError("adaptive quadrature did not converge on [" + std::to_string(a) + ", " + std::to_string(b) + "]", error);

    auto worst = std::max_element(panels.begin(), panels.end(),
                                  [](const auto &l, const auto &r) { return l.error < r.error; });
    const double lo = worst->a;
    const double hi = worst->b;
    const double mid = 0.5 * (lo + hi);
    if (!(mid > lo && mid < hi))
      throw NumericError("adaptive quadrature reached floating point resolution", error);
    *worst = detail::gk21_panel<T>(f, lo, mid);
    panels.push_back(detail::gk21_panel<T>(f, mid, hi));
    ++subdivisions;
  }
}

// Composite Gauss-Legendre sum over `panels` equal pieces of [a, b]; no error control.
template <class F>
auto integrate_fixed(F &&f, double a, double b, int panels) -> std::decay_t<std::invoke_result_t<F &, double>>
{
  using T = std::decay_t<std::invoke_result_t<F &, double>>;
  const auto &rule = gauss_legendre20();
  const double width = (b - a) / panels;
  T sum{};
  for (int p = 0; p < panels; ++p)
  {
    const double center = a + (p + 0.5) * width;
    T part{};
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
      part += rule.weights[i] * f(center + 0.5 * width * rule.nodes[i]);
    sum += part;
  }
  return sum * (0.5 * width);
}

} // namespace beamnet
