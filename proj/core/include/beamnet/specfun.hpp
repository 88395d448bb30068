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

#include "beamnet/quadrature.hpp"

// Special functions used by the analytic beampattern formulas. All functions
// are pure and reentrant; non-finite or out-of-domain arguments raise
// DomainError.
namespace beamnet::specfun
{

/// Bessel function of the first kind, order 0. Absolute error below 1e-12 for |x| <= 1000.
double bessel_j0(double x);

/// Bessel function of the first kind, order 1.
double bessel_j1(double x);

/// 2 J1(x) / x, equal to 1 at the origin. This is the characteristic function
/// of the compound node variable z with density (2/pi) sqrt(1 - z^2).
double j1_ratio(double x);

/// exp(-x) I0(x) for x >= 0.
double bessel_i0_scaled(double x);

/// exp(-x) I1(x) for x >= 0.
double bessel_i1_scaled(double x);

/// I1(rho) / I0(rho), in [0, 1) and increasing; no overflow for large rho.
double bessel_i_ratio(double rho);

/// First-order Marcum Q function Q1(a, b) = P(|Rice(a, 1)| > b).
double marcum_q1(double a, double b);

/// 2F3(1/2, 3/2; 1, 2, 3; -x^2), evaluated as the angular mean of
/// (2 J1(x sin(theta/2)) / (x sin(theta/2)))^2 over theta in [0, pi].
double hyp2f3_sidelobe(double x, const QuadratureSpec &quad = {});

/// 1F2(1/2; 1, 3/2; -x^2) = (2/pi) int_0^1 cos(2 x t) ln((1 + sqrt(1 - t^2)) / t) dt.
double hyp1f2_radial(double x, const QuadratureSpec &quad = {});

/// 1F2(1/2; 3/2, 2; -x^2) = int_0^1 2 J1(2 x s) / (2 x s) ds.
double hyp1f2_angle(double x, const QuadratureSpec &quad = {});

} // namespace beamnet::specfun
