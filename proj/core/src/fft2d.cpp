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

#include "fft2d.hpp"

#include <fftw3.h>

#include <mutex>

#include "beamnet/error.hpp"

namespace beamnet::detail
{

namespace
{

// FFTW planning is not thread safe; execution of a finished plan is.
std::mutex &planner_mutex()
{
  static std::mutex m;
  return m;
}

} // namespace

void fft2d_forward(std::vector<std::complex<double>> &data, std::size_t n)
{
  if (data.size() != n * n)
    throw DomainError("fft2d_forward: buffer does not hold an n x n array");
  auto *buf = reinterpret_cast<fftw_complex *>(data.data());
  const int dim = static_cast<int>(n);
  fftw_plan plan = nullptr;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_2d(dim, dim, buf, buf, FFTW_FORWARD, FFTW_ESTIMATE);
  }
  if (plan == nullptr)
    throw NumericError("fft2d_forward: FFTW could not create a plan", 0.0);
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

void fft1d(std::vector<std::complex<double>> &data, int sign)
{
  auto *buf = reinterpret_cast<fftw_complex *>(data.data());
  fftw_plan plan = nullptr;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(static_cast<int>(data.size()), buf, buf, sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                            FFTW_ESTIMATE);
  }
  if (plan == nullptr)
    throw NumericError("fft1d: FFTW could not create a plan", 0.0);
  fftw_execute(plan);
  std::lock_guard lock(planner_mutex());
  fftw_destroy_plan(plan);
}

} // namespace beamnet::detail
