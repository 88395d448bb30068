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

#include <beamnet/parallel.hpp>

#include "experiment.hpp"
#include "table.hpp"

namespace beamnet::cli
{

// Runs one fully expanded experiment. Throws beamnet::Error or UsageError.
Table run_experiment(const ExperimentSpec &spec, const Workers &workers);

// Monte Carlo trials a figure uses when spec.trials is 0.
std::size_t figure_default_trials(int figure);

Table run_figure(const ExperimentSpec &spec, const Workers &workers);

// One row per check with a 0/1 "pass" column.
Table run_selftest();
bool selftest_passed(const Table &table);

} // namespace beamnet::cli
