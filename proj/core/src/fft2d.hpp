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

#include <complex>
#include <cstddef>
#include <vector>

namespace beamnet::detail
{

// In-place forward 2-D DFT (kernel exp(-2 pi j k m / n)) of an n x n row-major array.
void fft2d_forward(std::vector<std::complex<double>> &data, std::size_t n);

// In-place 1-D DFT of data.size() points; sign -1 is forward, +1 backward. Unscaled.
void fft1d(std::vector<std::complex<double>> &data, int sign);

} // namespace beamnet::detail
