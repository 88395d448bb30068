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

#include <cstddef>
#include <algorithm>
#include <functional>
#include <vector>

namespace beamnet
{

struct Workers
{
  unsigned count = 1;

  /// Worker count from BEAMNET_THREADS, else the hardware concurrency.
  static Workers from_environment();
};

/// Calls body(i) for every i in [0, count) on up to workers.count threads.
/// The first exception thrown by any call is rethrown on the caller's thread.
void parallel_for(std::size_t count, const Workers &workers, const std::function<void(std::size_t)> &body);

/// Monte Carlo trials are grouped in fixed blocks so that the reduction order
/// (block by block, trial by trial inside a block) never depends on the
/// number of workers.
inline constexpr std::size_t kTrialBlock = 256;

template <class Acc, class Init, class Body>
std::vector<Acc> run_trial_blocks(std::size_t n_trials, const Workers &workers, Init init, Body body)
{
  const std::size_t blocks = (n_trials + kTrialBlock - 1) / kTrialBlock;
  std::vector<Acc> partial;
  partial.reserve(blocks);
  for (std::size_t b = 0; b < blocks; ++b)
    partial.push_back(init());
  parallel_for(blocks, workers, [&](std::size_t b) {
    const std::size_t first = b * kTrialBlock;
    const std::size_t last = std::min(n_trials, first + kTrialBlock);
    for (std::size_t t = first; t < last; ++t)
      body(partial[b], t);
  });
  return partial;
}

} // namespace beamnet
