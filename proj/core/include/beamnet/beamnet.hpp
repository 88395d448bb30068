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

#include "beamnet/array_model.hpp"
#include "beamnet/average_pattern.hpp"
#include "beamnet/ccdf.hpp"
#include "beamnet/directivity.hpp"
#include "beamnet/error.hpp"
#include "beamnet/impairments.hpp"
#include "beamnet/parallel.hpp"
#include "beamnet/peak_sidelobe.hpp"
#include "beamnet/quadrature.hpp"
#include "beamnet/rng.hpp"
#include "beamnet/specfun.hpp"
#include "beamnet/stats.hpp"
