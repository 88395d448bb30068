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
#include <limits>
#include <numbers>

#include "beamnet/error.hpp"
#include "beamnet/quadrature.hpp"
#include "beamnet/specfun.hpp"
#include "oracles.hpp"

using namespace beamnet;
using std::numbers::pi;

TEST_CASE("quadrature integrates smooth and oscillatory functions")
{
  const auto r = integrate([](double x) { return std::exp(x); }, 0.0, 1.0);
  CHECK(r.value == doctest::Approx(std::exp(1.0) - 1.0).epsilon(1e-14));
  const auto osc = integrate([](double x) { return std::cos(50.0 * x); }, 0.0, pi, {}, 8);
  CHECK(std::fabs(osc.value) < 1e-10);
  const auto c = integrate([](double x) { return std::complex<double>(std::cos(x), std::sin(x)); }, 0.0, pi / 2);
  CHECK(c.value.real() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(c.value.imag() == doctest::Approx(1.0).epsilon(1e-13));
  CHECK(integrate_fixed([](double x) { return x * x; }, 0.0, 3.0, 2) == doctest::Approx(9.0).epsilon(1e-14));
}

TEST_CASE("quadrature spec validation and non-convergence")
{
  CHECK_THROWS_AS(QuadratureSpec({0.0, 1e-9, 200}).validate(), DomainError);
  CHECK_THROWS_AS(QuadratureSpec({1e-10, -1.0, 200}).validate(), DomainError);
  CHECK_THROWS_AS(QuadratureSpec({1e-10, 1e-9, 0}).validate(), DomainError);
  const QuadratureSpec tight{1e-300, 1e-300, 1};
  try
  {
    (void)integrate([](double x) { return std::sqrt(x); }, 0.0, 1.0, tight);
    FAIL("expected NumericError");
  }
  catch (const NumericError &e)
  {
    CHECK(e.residual() > 0.0);
    CHECK(e.kind() == ErrorKind::numeric);
  }
}

TEST_CASE("bessel_j0")
{
  CHECK(specfun::bessel_j0(0.0) == 1.0);

  // First zero re-derived by bisection on the series oracle.
  double lo = 2.0;
  double hi = 3.0;
  for (int i = 0; i < 80; ++i)
  {
    const double mid = 0.5 * (lo + hi);
    (oracle::bessel_j_series(0, mid) > 0.0 ? lo : hi) = mid;
  }
  CHECK(std::fabs(0.5 * (lo + hi) - 2.404825557695773) < 1e-12);
  CHECK(std::fabs(specfun::bessel_j0(2.404825557695773)) < 1e-9);

  CHECK(std::fabs(specfun::bessel_j0(10.0) - oracle::bessel_j_series(0, 10.0)) < 1e-10);

  double worst = 0.0;
  for (double x = -1000.0; x <= 1000.0; x += 0.0731)
    worst = std::max(worst, std::fabs(specfun::bessel_j0(x) - std::cyl_bessel_j(0.0, std::fabs(x))));
  CHECK(worst <= 1e-12);

  // Switch between the series and the asymptotic expansion stays continuous.
  for (double x : {16.9, 16.99999, 17.0, 17.00001, 17.1})
    CHECK(std::fabs(specfun::bessel_j0(x) - oracle::bessel_j_series(0, x)) < 1e-12);

  CHECK_THROWS_AS(specfun::bessel_j0(std::numeric_limits<double>::infinity()), DomainError);
  CHECK_THROWS_AS(specfun::bessel_j0(std::nan("")), DomainError);
}

TEST_CASE("bessel_j1")
{
  CHECK(specfun::bessel_j1(0.0) == 0.0);
  double worst = 0.0;
  for (double x = -1000.0; x <= 1000.0; x += 0.0731)
  {
    const double ref = (x < 0.0 ? -1.0 : 1.0) * std::cyl_bessel_j(1.0, std::fabs(x));
    worst = std::max(worst, std::fabs(specfun::bessel_j1(x) - ref));
  }
  CHECK(worst <= 1e-12);
}

TEST_CASE("j1_ratio")
{
  CHECK(specfun::j1_ratio(0.0) == 1.0);
  const double x = 1e-8;
  CHECK(std::fabs(specfun::j1_ratio(x) - (1.0 - x * x / 8.0)) <= 1e-15);
  CHECK(std::fabs(specfun::j1_ratio(20.0) - 2.0 * oracle::bessel_j_series(1, 20.0) / 20.0) < 1e-10);
  for (double t = -300.0; t <= 300.0; t += 0.0173)
    CHECK(std::fabs(specfun::j1_ratio(t)) <= 1.0);
  CHECK_THROWS_AS(specfun::j1_ratio(std::numeric_limits<double>::infinity()), DomainError);
}

TEST_CASE("bessel_i_ratio")
{
  CHECK(specfun::bessel_i_ratio(0.0) == 0.0);
  CHECK(specfun::bessel_i_ratio(1e4) > 0.999);
  CHECK(specfun::bessel_i_ratio(1e4) < 1.0);
  const double ref = oracle::bessel_i_series(1, 2.0) / oracle::bessel_i_series(0, 2.0);
  CHECK(std::fabs(specfun::bessel_i_ratio(2.0) - ref) < 1e-10);
  double prev = -1.0;
  for (double rho = 0.0; rho <= 1e4; rho = rho * 1.3 + 0.01)
  {
    const double v = specfun::bessel_i_ratio(rho);
    CHECK(v > prev);
    CHECK(v < 1.0);
    prev = v;
  }
  CHECK_THROWS_AS(specfun::bessel_i_ratio(-1.0), DomainError);
  // Scaled values agree with the series away from the origin.
  CHECK(specfun::bessel_i0_scaled(5.0) == doctest::Approx(std::exp(-5.0) * oracle::bessel_i_series(0, 5.0)).epsilon(1e-12));
  CHECK(specfun::bessel_i1_scaled(45.0) == doctest::Approx(std::exp(-45.0) * std::cyl_bessel_i(1.0, 45.0)).epsilon(1e-12));
}

TEST_CASE("marcum_q1")
{
  for (double a : {0.0, 0.5, 3.0, 40.0})
    CHECK(specfun::marcum_q1(a, 0.0) == 1.0);
  for (double b : {0.1, 1.0, 2.5, 6.0})
    CHECK(specfun::marcum_q1(0.0, b) == doctest::Approx(std::exp(-b * b / 2.0)).epsilon(1e-12));
  CHECK(std::fabs(specfun::marcum_q1(1.0, 2.0) - oracle::marcum_q1_integral(1.0, 2.0)) < 1e-8);
  // Both sides of the a * b = 300 switch.
  for (auto [a, b] : {std::pair{15.0, 19.9}, {15.0, 20.1}, {20.0, 16.0}, {16.0, 20.0}, {3.0, 4.0}, {10.0, 12.0}})
    CHECK(std::fabs(specfun::marcum_q1(a, b) - oracle::marcum_q1_integral(a, b)) < 1e-9);
  CHECK_THROWS_AS(specfun::marcum_q1(-1.0, 1.0), DomainError);
  CHECK_THROWS_AS(specfun::marcum_q1(1.0, -1.0), DomainError);
}

TEST_CASE("hyp2f3_sidelobe")
{
  CHECK(specfun::hyp2f3_sidelobe(0.0) == 1.0);
  CHECK(std::fabs(specfun::hyp2f3_sidelobe(0.5) - oracle::hyp2f3_series(0.5, 30)) < 1e-9);
  CHECK(specfun::hyp2f3_sidelobe(100.0) <= 1.1727 / 100.0);
  for (double x = 10.0; x <= 1000.0; x *= 1.5)
    CHECK(specfun::hyp2f3_sidelobe(x) <= 1.1727 / x);
  CHECK(specfun::hyp2f3_sidelobe(7.0) > 0.0);
  CHECK_THROWS_AS(specfun::hyp2f3_sidelobe(-1.0), DomainError);
  CHECK_THROWS_AS(specfun::hyp2f3_sidelobe(500.0, {1e-300, 1e-300, 1}), NumericError);
}

TEST_CASE("hyp1f2_radial")
{
  CHECK(specfun::hyp1f2_radial(0.0) == 1.0);
  for (double x : {0.1, 0.5, 1.0, 2.0})
    CHECK(std::fabs(specfun::hyp1f2_radial(x) - oracle::hyp1f2_radial_series(x)) < 1e-9);
  CHECK(std::fabs(specfun::hyp1f2_radial(20.0)) < 0.2);
  for (double x = 0.0; x <= 60.0; x += 0.37)
  {
    const double v = specfun::hyp1f2_radial(x);
    CHECK(v <= 1.0);
    CHECK(v >= -1.0);
  }
  CHECK_THROWS_AS(specfun::hyp1f2_radial(-0.1), DomainError);
}

TEST_CASE("hyp1f2_angle")
{
  CHECK(specfun::hyp1f2_angle(0.0) == 1.0);
  for (double x : {0.1, 0.5, 1.0, 2.0})
    CHECK(std::fabs(specfun::hyp1f2_angle(x) - oracle::hyp1f2_angle_series(x)) < 1e-9);
  const double v = specfun::hyp1f2_angle(pi / 2.0);
  CHECK(std::fabs(10.0 * std::log10(v * v / 0.5)) < 0.5);
  for (double x = 0.01; x <= 40.0; x += 0.21)
    CHECK(std::fabs(specfun::hyp1f2_angle(x)) < 1.0);
  CHECK_THROWS_AS(specfun::hyp1f2_angle(-0.1), DomainError);
}
