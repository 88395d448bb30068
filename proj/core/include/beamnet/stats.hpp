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

#include <cmath>
#include <cstddef>
#include <vector>

namespace beamnet
{

struct MeanEstimate
{
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t count = 0;
};

// Welford accumulator with the pairwise merge of Chan et al.
class MeanAccumulator
{
public:
  void add(double x)
  {
    ++n_;
    const double d = x - mean_;
    mean_ += d / static_cast<double>(n_);
    m2_ += d * (x - mean_);
  }

  void merge(const MeanAccumulator &other)
  {
    if (other.n_ == 0)
      return;
    if (n_ == 0)
    {
      *this = other;
      return;
    }
    const double n = static_cast<double>(n_ + other.n_);
    const double d = other.mean_ - mean_;
    mean_ += d * static_cast<double>(other.n_) / n;
    m2_ += other.m2_ + d * d * static_cast<double>(n_) * static_cast<double>(other.n_) / n;
    n_ += other.n_;
  }

  std::size_t count() const { return n_; }
  double mean() const { return mean_; }
  double variance() const { return n_ > 1 ? m2_ / static_cast<double>(n_ - 1) : 0.0; }

  MeanEstimate estimate() const
  {
    const double se = n_ > 1 ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0;
    return {mean_, se, n_};
  }

private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

/// Binomial standard error of an empirical proportion.
inline double binomial_std_error(double p, std::size_t n)
{
  return n > 0 ? std::sqrt(p * (1.0 - p) / static_cast<double>(n)) : 0.0;
}

} // namespace beamnet
