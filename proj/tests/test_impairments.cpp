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

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "beamnet/average_pattern.hpp"
#include "beamnet/error.hpp"
#include "beamnet/impairments.hpp"
#include "beamnet/rng.hpp"
#include "beamnet/specfun.hpp"
#include "oracles.hpp"

#include <boost/math/quadrature/gauss.hpp>

using namespace beamnet;
using std::numbers::pi;

namespace
{

double db(double x)
{
  return 10.0 * std::log10(x);
}

template <class F>
double bisect_decreasing(F f, double lo, double hi, double target)
{
  for (int i = 0; i < 200; ++i)
  {
    const double mid = 0.5 * (lo + hi);
    (f(mid) > target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

} // namespace

TEST_CASE("tikhonov")
{
  const ClosedLoopParams flat{1e-9};
  CHECK(tikhonov_pdf(2.0, flat) == doctest::Approx(1.0 / (2.0 * pi)).epsilon(1e-6));
  for (double rho : {0.1, 1.0, 10.0, 300.0})
  {
    const ClosedLoopParams p{rho};
    CHECK(std::fabs(oracle::boost_integrate([&](double x) { return tikhonov_pdf(x, p); }, -pi, pi, 1e-13) - 1.0) <
          1e-9);
  }
  CHECK_THROWS_AS(tikhonov_pdf(4.0, {1.0}), DomainError);
  CHECK_THROWS_AS(tikhonov_pdf(0.0, {0.0}), DomainError);

  for (double rho : {10.0, 400.0})
  {
    const ClosedLoopParams p{rho};
    StreamRng rng(3, 0, StreamPurpose::phase_noise);
    std::vector<double> s(1000000);
    for (auto &x : s)
      x = sample_tikhonov(p, rng);
    const double w = std::min(pi, 8.0 / std::sqrt(rho));
    const auto chi = oracle::chi_square_density(s, -w, w, 100, [&](double x) { return tikhonov_pdf(x, p); });
    CHECK_MESSAGE(chi.passes(0.01), "rho = ", rho, " chi2 = ", chi.statistic, " dof = ", chi.dof);
  }
}

TEST_CASE("attenuation_phase")
{
  CHECK(attenuation_phase({1e6}) > 0.9999);
  CHECK(attenuation_phase({1e-8}) < 1e-8);
  double prev = 0.0;
  for (double rho = 0.05; rho < 100.0; rho *= 1.2)
  {
    const double a = attenuation_phase({rho});
    CHECK(a > prev);
    CHECK(a < 1.0);
    prev = a;
  }
  const double rho3 =
      bisect_decreasing([](double r) { return -std::pow(attenuation_phase({r}), 2.0); }, 0.01, 100.0, -0.5);
  CHECK(std::fabs(db(rho3) - 3.0) <= 0.5);
}

TEST_CASE("avg_pattern_closed_loop")
{
  for (double phi : {0.0, 0.1, 1.0, pi})
    CHECK(avg_pattern_closed_loop(16, 2.0, phi, {1e9}) == doctest::Approx(average_pattern(16, 2.0, phi)).epsilon(1e-8));
  const double a = attenuation_phase({4.0});
  CHECK(avg_pattern_closed_loop(1000000, 2.0, 0.0, {4.0}) == doctest::Approx(a * a).epsilon(1e-5));

  ImpairmentParams p;
  p.kind = ImpairmentKind::closed_loop;
  p.closed_loop = {4.0};
  const std::vector<double> grid{0.0, pi / 8.0};
  const auto mc = mc_impaired_pattern({16, 2.0, 7}, grid, p, 100000);
  CHECK(mc.label == "closed-loop-monte-carlo");
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(std::fabs(mc.power[i] - avg_pattern_closed_loop(16, 2.0, grid[i], p.closed_loop)) <= 3.0 * mc.std_error[i]);
}

TEST_CASE("radial_error_pdf")
{
  const OpenLoopParams p{0.3, 0.0};
  CHECK(radial_error_pdf(0.3, p) == 0.0);
  CHECK(radial_error_pdf(-0.3, p) == 0.0);
  CHECK(radial_error_pdf(0.31, p) == 0.0);
  const double mass = 2.0 * (oracle::boost_integrate([&](double v) { return radial_error_pdf(v, p); }, 0.0, 0.003,
                                                     1e-13) +
                             oracle::boost_integrate([&](double v) { return radial_error_pdf(v, p); }, 0.003, 0.3,
                                                     1e-13));
  CHECK(std::fabs(mass - 1.0) < 1e-8);
  CHECK_THROWS_AS(radial_error_pdf(0.1, {0.0, 0.0}), DegenerateError);

  StreamRng rng(3, 0, StreamPurpose::location_error);
  std::vector<double> s(1000000);
  for (auto &v : s)
    v = rng.uniform(-0.3, 0.3) * std::cos(rng.uniform(0.0, 2.0 * pi));
  const auto chi = oracle::chi_square_density(s, -0.3, 0.3, 100, [&](double v) { return radial_error_pdf(v, p); });
  CHECK_MESSAGE(chi.passes(0.01), "chi2 = ", chi.statistic, " dof = ", chi.dof);
}

TEST_CASE("attenuation_radial")
{
  CHECK(attenuation_radial({0.0, 0.0}) == 1.0);
  double prev = 1.0;
  for (double r = 0.025; r <= 0.5; r += 0.025)
  {
    const double a = attenuation_radial({r, 0.0});
    CHECK(a < prev);
    prev = a;
  }

  const double r3 = bisect_decreasing([](double r) { return std::pow(attenuation_radial({r, 0.0}), 2.0); }, 0.0, 0.5,
                                      0.5);
  const double r3_ref =
      bisect_decreasing([](double r) { return std::pow(oracle::hyp1f2_radial_series(pi * r), 2.0); }, 0.0, 0.5, 0.5);
  CHECK(r3 == doctest::Approx(r3_ref).epsilon(0.02));

  const OpenLoopParams p{0.4, 0.0};
  StreamRng rng(9, 0, StreamPurpose::location_error);
  const std::size_t m = 1000000;
  double sum = 0.0, sum2 = 0.0;
  for (std::size_t i = 0; i < m; ++i)
  {
    const double v = rng.uniform(-0.4, 0.4) * std::cos(rng.uniform(0.0, 2.0 * pi));
    const double c = std::cos(2.0 * pi * v);
    sum += c;
    sum2 += c * c;
  }
  const double mean = sum / m;
  const double se = std::sqrt((sum2 / m - mean * mean) / m);
  CHECK(std::fabs(attenuation_radial(p) - mean) <= 3.0 * se);
}

TEST_CASE("attenuation_angle")
{
  CHECK(attenuation_angle(0.0, {0.0, 0.0}, 4.0) == 1.0);
  CHECK(attenuation_angle(0.3, {0.0, 0.0}, 4.0) == specfun::j1_ratio(alpha(0.3, 4.0)));
  for (double rp : {0.1, 0.25, 0.5, 1.0})
  {
    const double r_tilde = 16.0;
    const OpenLoopParams p{0.0, rp / r_tilde};
    CHECK(std::fabs(attenuation_angle(0.0, p, r_tilde) - specfun::hyp1f2_angle(pi * rp)) < 1e-4);
  }
  const double a = attenuation_angle(0.0, {0.0, 1.0 / 16.0}, 8.0);
  CHECK(std::fabs(db(a * a) + 3.0) <= 0.5);
  CHECK_THROWS_AS(attenuation_angle(4.0, {0.0, 0.1}, 4.0), DomainError);
}

TEST_CASE("apsi_mainbeam_approx")
{
  CHECK(apsi_mainbeam_approx(0.0, {0.0, 0.0}, 4.0) == 1.0);
  CHECK(apsi_mainbeam_approx(0.0, {0.0, 1e-9}, 4.0) == doctest::Approx(1.0).epsilon(1e-12));
  for (double rp : {0.1, 0.3, 0.5})
  {
    const OpenLoopParams p{0.0, rp / 4.0};
    CHECK(std::fabs(apsi_mainbeam_approx(0.0, p, 4.0) - attenuation_angle(0.0, p, 4.0)) < 1e-3);
  }

  // Off boresight the two-term form tracks the quadrature only with the
  // (1 + phi/psi) weight on the phi + psi term.
  const OpenLoopParams p{0.0, 0.1};
  double worst_ok = 0.0;
  double worst_swapped = 0.0;
  for (double phi = -0.2; phi <= 0.2; phi += 0.01)
  {
    const double ref = attenuation_angle(phi, p, 4.0);
    worst_ok = std::max(worst_ok, std::fabs(apsi_mainbeam_approx(phi, p, 4.0) - ref));
    worst_swapped = std::max(worst_swapped, std::fabs(apsi_mainbeam_swapped(phi, p, 4.0) - ref));
  }
  CHECK(worst_ok < 0.01);
  CHECK(worst_swapped > 0.1);
  CHECK(apsi_mainbeam_approx(0.05, p, 4.0) == doctest::Approx(apsi_mainbeam_approx(-0.05, p, 4.0)).epsilon(1e-14));
}

// Per-node mean phasor E exp(j theta) under the exact open-loop phase
// theta = -2 pi R r (cos(phi - psi) - cos(psi + dpsi)) + 2 pi dr cos(psi + dpsi),
// keeping the dependence of both terms on psi. dr and r are integrated in closed form.
std::complex<double> open_loop_phasor(double phi, double r_tilde, const OpenLoopParams &p)
{
  auto radial = [](double b) {
    if (std::fabs(b) < 1e-4)
      return std::complex<double>(1.0 - b * b / 4.0, 2.0 * b / 3.0);
    const std::complex<double> j(0.0, 1.0);
    return 2.0 * (std::exp(j * b) * (-j / b + 1.0 / (b * b)) - 1.0 / (b * b));
  };
  auto integrand = [&](double psi, double dpsi) {
    const double c = std::cos(psi + dpsi);
    const double b = -2.0 * pi * r_tilde * (std::cos(phi - psi) - c);
    const double x = 2.0 * pi * p.rmax_over_lambda * c;
    const double sinc = std::fabs(x) < 1e-12 ? 1.0 : std::sin(x) / x;
    return radial(b) * sinc;
  };
  // Periodic trapezoid in psi, 30-point Gauss-Legendre in dpsi.
  using rule = boost::math::quadrature::gauss<double, 30>;
  const std::size_t m = 4096;
  std::complex<double> sum{};
  for (std::size_t k = 0; k < rule::abscissa().size(); ++k)
  {
    const double x = rule::abscissa()[k];
    for (double dpsi : {x * p.psi_max, -x * p.psi_max})
    {
      std::complex<double> inner{};
      for (std::size_t i = 0; i < m; ++i)
        inner += integrand(-pi + 2.0 * pi * static_cast<double>(i) / static_cast<double>(m), dpsi);
      sum += (x == 0.0 ? 0.5 : 1.0) * rule::weights()[k] * inner / static_cast<double>(m);
    }
  }
  return 0.5 * sum;
}

TEST_CASE("avg_pattern_open_loop")
{
  for (double phi : {0.0, 0.2, 2.0})
    CHECK(avg_pattern_open_loop(16, 2.0, phi, {0.0, 0.0}) == doctest::Approx(average_pattern(16, 2.0, phi)).epsilon(1e-14));
  const OpenLoopParams p{0.1, 0.05};
  for (double phi = -pi; phi <= pi; phi += 0.1)
  {
    const double v = avg_pattern_open_loop(16, 2.0, phi, p);
    CHECK(v >= 1.0 / 16.0);
    CHECK(v <= 1.0);
  }
  CHECK(avg_pattern_open_loop(16, 2.0, 0.0, p) <= average_pattern(16, 2.0, 0.0));
}

TEST_CASE("open-loop Monte Carlo follows the exact joint model")
{
  ImpairmentParams ip;
  ip.kind = ImpairmentKind::open_loop;
  ip.open_loop = {0.1, 0.05};
  const std::vector<double> grid{0.0, 0.05, 0.15, pi / 4.0};
  const auto mc = mc_impaired_pattern({16, 2.0, 7}, grid, ip, 100000);
  CHECK(mc.label == "open-loop-monte-carlo");
  for (std::size_t i = 0; i < grid.size(); ++i)
  {
    const double e = std::norm(open_loop_phasor(grid[i], 2.0, ip.open_loop));
    const double exact = 1.0 / 16.0 + (15.0 / 16.0) * e;
    CHECK_MESSAGE(std::fabs(mc.power[i] - exact) <= 3.0 * mc.std_error[i], "phi = ", grid[i]);
  }
}

// The product form treats z_k and v_k as independent although both depend on
// psi_k; near the mainbeam edge the resulting bias exceeds 5 standard errors
// at 1e5 trials.
TEST_CASE("open-loop product form against Monte Carlo" * doctest::may_fail())
{
  ImpairmentParams ip;
  ip.kind = ImpairmentKind::open_loop;
  ip.open_loop = {0.1, 0.05};
  const std::vector<double> grid{0.0, 0.05, 0.15, pi / 4.0};
  const auto mc = mc_impaired_pattern({16, 2.0, 7}, grid, ip, 100000);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK_MESSAGE(std::fabs(mc.power[i] - avg_pattern_open_loop(16, 2.0, grid[i], ip.open_loop)) <=
                      5.0 * mc.std_error[i],
                  "phi = ", grid[i]);
}

TEST_CASE("mc_impaired_pattern reductions")
{
  ImpairmentParams ip;
  ip.kind = ImpairmentKind::open_loop;
  const std::vector<double> grid{0.0, 0.3, 1.0};
  const auto mc = mc_impaired_pattern({16, 2.0, 7}, grid, ip, 20000);
  for (std::size_t i = 0; i < grid.size(); ++i)
    CHECK(std::fabs(mc.power[i] - average_pattern(16, 2.0, grid[i])) <= 3.0 * std::max(mc.std_error[i], 1e-15));
  CHECK_THROWS_AS(mc_impaired_pattern({16, 2.0, 7}, grid, ip, 99), DomainError);
}
