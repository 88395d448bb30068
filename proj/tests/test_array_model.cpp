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

#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "beamnet/array_model.hpp"
#include "beamnet/average_pattern.hpp"
#include "beamnet/error.hpp"
#include "oracles.hpp"

using namespace beamnet;
using std::numbers::pi;

TEST_CASE("sample_realization is deterministic and well distributed")
{
  const ArrayConfig cfg{16, 2.0, 7};
  const auto a = sample_realization(cfg, 0);
  const auto b = sample_realization(cfg, 0);
  CHECK(a.radii == b.radii);
  CHECK(a.angles == b.angles);
  CHECK(sample_realization(cfg, 1).radii != a.radii);
  CHECK(sample_realization({16, 2.0, 8}, 0).radii != a.radii);

  const ArrayConfig big{100000, 2.0, 7};
  const auto nodes = sample_realization(big, 3);
  const double d = oracle::ks_statistic(nodes.radii, [](double r) { return r * r; });
  CHECK(d < oracle::ks_critical_1pct(nodes.size()));
  std::complex<double> m{};
  for (double psi : nodes.angles)
  {
    CHECK(psi >= -pi);
    CHECK(psi < pi);
    m += std::polar(1.0, psi);
  }
  CHECK(std::abs(m) / static_cast<double>(nodes.size()) < 0.01);
  for (double r : nodes.radii)
  {
    CHECK(r >= 0.0);
    CHECK(r <= 1.0);
  }
}

TEST_CASE("ArrayConfig validation")
{
  CHECK_THROWS_AS(ArrayConfig({0, 1.0, 0}).validate(), DomainError);
  CHECK_THROWS_AS(ArrayConfig({4, 0.0, 0}).validate(), DomainError);
  CHECK_THROWS_AS(ArrayConfig({4, -1.0, 0}).validate(), DomainError);
  CHECK_NOTHROW(ArrayConfig({1, 0.01, 0}).validate());
}

TEST_CASE("alpha")
{
  CHECK(alpha(0.0, 3.0) == 0.0);
  CHECK(alpha(pi, 2.0) == doctest::Approx(8.0 * pi).epsilon(1e-15));
  CHECK(alpha(pi / 4.0, 2.0) == doctest::Approx(8.0 * pi * std::sin(pi / 8.0)).epsilon(1e-15));
  CHECK_THROWS_AS(alpha(3.2, 1.0), DomainError);
}

TEST_CASE("compound_z")
{
  NodeRealization nodes;
  nodes.radii = {0.0, 1.0, 0.5};
  nodes.angles = {1.0, pi / 2.0 + 0.15, -2.0};
  const auto z = compound_z(nodes, 0.3);
  CHECK(z[0] == 0.0);
  CHECK(z[1] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(z[2] == doctest::Approx(0.5 * std::sin(-2.15)).epsilon(1e-15));
  CHECK_THROWS_AS(compound_z(nodes, -4.0), DomainError);

  // Pooled compound values follow (2/pi) sqrt(1 - z^2).
  const ArrayConfig cfg{1000, 1.0, 11};
  std::vector<double> pooled;
  pooled.reserve(1000000);
  for (std::size_t s = 0; s < 1000; ++s)
  {
    const auto zs = compound_z(sample_realization(cfg, s), 0.7);
    pooled.insert(pooled.end(), zs.begin(), zs.end());
  }
  for (double v : pooled)
  {
    CHECK(v >= -1.0);
    CHECK(v <= 1.0);
  }
  const auto chi = oracle::chi_square_density(pooled, -1.0, 1.0, 100,
                                              [](double v) { return 2.0 / pi * std::sqrt(std::max(0.0, 1.0 - v * v)); });
  CHECK(chi.passes(0.01));
}

TEST_CASE("array_factor")
{
  const ArrayConfig cfg{16, 2.0, 7};
  for (std::size_t s = 0; s < 5; ++s)
  {
    const auto nodes = sample_realization(cfg, s);
    const auto f0 = array_factor(nodes, 0.0, cfg.r_tilde);
    CHECK(f0.real() == 1.0);
    CHECK(f0.imag() == 0.0);
    for (double phi = -pi; phi <= pi; phi += 0.013)
    {
      const auto f = array_factor(nodes, phi, cfg.r_tilde);
      CHECK(std::abs(f) <= 1.0 + 1e-15);
      // Two-line oracle straight from the definition.
      std::complex<double> ref{};
      for (std::size_t k = 0; k < nodes.size(); ++k)
        ref += std::exp(std::complex<double>(0.0, -4.0 * pi * cfg.r_tilde * std::sin(phi / 2.0) * nodes.radii[k] *
                                                      std::sin(nodes.angles[k] - phi / 2.0)));
      ref /= static_cast<double>(nodes.size());
      CHECK(std::abs(f - ref) < 1e-14);
    }
  }
  const auto single = sample_realization({1, 3.0, 5}, 0);
  for (double phi = -pi; phi <= pi; phi += 0.1)
    CHECK(std::abs(array_factor(single, phi, 3.0)) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("pattern_power agrees with array_factor")
{
  const ArrayConfig cfg{64, 5.0, 3};
  const auto nodes = sample_realization(cfg, 2);
  const auto xy = to_cartesian(nodes);
  for (double phi = -pi; phi <= pi; phi += 0.01)
    CHECK(std::fabs(pattern_power(xy, phi, cfg.r_tilde) - std::norm(array_factor(nodes, phi, cfg.r_tilde))) < 1e-13);
}

TEST_CASE("beampattern")
{
  const auto grid = uniform_grid(default_grid_size(2.0), -pi, pi);
  CHECK(grid.front() == -pi);
  CHECK(grid.back() == pi);
  CHECK(grid.size() >= static_cast<std::size_t>(16.0 * pi * 2.0));
  CHECK(grid.size() % 2 == 1);
  CHECK(grid[grid.size() / 2] == doctest::Approx(0.0).epsilon(1e-15));

  const auto single = sample_realization({1, 2.0, 1}, 0);
  for (double p : beampattern(single, grid, 2.0).power)
    CHECK(p == doctest::Approx(1.0).epsilon(1e-14));

  const ArrayConfig cfg{16, 2.0, 7};
  const auto nodes = sample_realization(cfg, 0);
  const std::vector<double> zero{0.0};
  CHECK(beampattern(nodes, zero, 2.0).power[0] == 1.0);
  const auto curve = beampattern(nodes, grid, 2.0);
  for (double p : curve.power)
  {
    CHECK(p >= 0.0);
    CHECK(p <= 1.0 + 1e-15);
  }

  // Half-power width of the realisation against the average-pattern beamwidth.
  const std::size_t centre = grid.size() / 2;
  std::size_t right = centre;
  while (right + 1 < grid.size() && curve.power[right] > 0.5)
    ++right;
  std::size_t left = centre;
  while (left > 0 && curve.power[left] > 0.5)
    --left;
  const double width = grid[right] - grid[left];
  CHECK(width == doctest::Approx(2.0 * beamwidth_3db(2.0)).epsilon(0.3));

  // Sidelobes fluctuate around the floor 1/N.
  const auto region = sidelobe_region(16, 2.0);
  double sum = 0.0;
  double peak = 0.0;
  std::size_t count = 0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    if (region.contains(grid[i]))
    {
      sum += curve.power[i];
      peak = std::max(peak, curve.power[i]);
      ++count;
    }
  const double mean = sum / static_cast<double>(count);
  CHECK(mean > 0.5 / 16.0);
  CHECK(mean < 2.0 / 16.0);
  CHECK(peak > 2.0 / 16.0);
}

TEST_CASE("mc_pattern_samples and mc_mean_pattern agree on the same streams")
{
  const ArrayConfig cfg{8, 1.5, 21};
  const std::vector<double> grid{0.4};
  const auto samples = mc_pattern_samples(cfg, 0.4, 300);
  const auto curve = mc_mean_pattern(cfg, grid, 300);
  double mean = 0.0;
  for (double s : samples)
    mean += s;
  mean /= 300.0;
  CHECK(curve.power[0] == doctest::Approx(mean).epsilon(1e-12));
  CHECK(curve.std_error[0] > 0.0);
  CHECK_THROWS_AS(mc_pattern_samples(cfg, 3.5, 10), DomainError);
}

TEST_CASE("Monte Carlo results do not depend on the worker count")
{
  const ArrayConfig cfg{12, 2.0, 5};
  const auto grid = uniform_grid(17, -pi, pi);
  const auto one = mc_mean_pattern(cfg, grid, 1000, Workers{1});
  const auto four = mc_mean_pattern(cfg, grid, 1000, Workers{4});
  CHECK(one.power == four.power);
  CHECK(one.std_error == four.std_error);
}
