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

#include "beamnet/rng.hpp"

#include <cmath>

namespace beamnet
{

namespace
{

std::seed_seq make_seed_seq(std::uint64_t seed, std::uint64_t stream, StreamPurpose purpose)
{
  const auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
  const auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  return std::seed_seq{lo(seed), hi(seed), lo(stream), hi(stream), static_cast<std::uint32_t>(purpose)};
}

} // namespace

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t stream, StreamPurpose purpose)
{
  auto seq = make_seed_seq(seed, stream, purpose);
  engine_.seed(seq);
}

double StreamRng::normal()
{
  if (has_spare_)
  {
    has_spare_ = false;
    return spare_;
  }
  double u, v, s;
  do
  {
    u = uniform(-1.0, 1.0);
    v = uniform(-1.0, 1.0);
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  const double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_ = v * f;
  has_spare_ = true;
  return u * f;
}

} // namespace beamnet
