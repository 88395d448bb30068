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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include <beamnet/array_model.hpp>
#include <beamnet/impairments.hpp>

namespace beamnet::cli
{

// Malformed command line or config; maps to exit code 2.
class UsageError : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

// Uniform grid of `count` points on [lo, hi]; angles in radians.
struct GridSpec
{
  std::size_t count = 0;
  double lo = 0.0;
  double hi = 0.0;
  bool operator==(const GridSpec &) const = default;
};

enum class ThresholdUnit
{
  linear,        // P0 on the normalized pattern scale
  normalized_db, // 10 log10(N P0)
};

struct ThresholdSpec
{
  std::size_t count = 0;
  double lo = 0.0;
  double hi = 0.0;
  ThresholdUnit unit = ThresholdUnit::normalized_db;
  bool operator==(const ThresholdSpec &) const = default;
};

enum class OutputFormat
{
  csv,
  json,
};

struct ExperimentSpec
{
  std::string command;
  int figure = 0; // only for command "figure"
  ArrayConfig array;
  GridSpec angle_grid;
  ThresholdSpec thresholds;
  std::optional<ImpairmentParams> impairment;
  std::size_t trials = 0;
  double phi = 0.0;              // look angle for single-angle commands
  std::vector<std::string> methods; // ccdf curves to emit
  std::size_t cf_grid = 0;
  std::string output_path = "-"; // "-" is stdout
  OutputFormat format = OutputFormat::csv;

  // Linear P0 values for the threshold grid.
  std::vector<double> threshold_values() const;
  // Throws DomainError on inconsistent fields.
  void validate() const;
};

bool same_array(const ArrayConfig &a, const ArrayConfig &b);
// Compares the parameters of the active kind only.
bool same_impairment(const std::optional<ImpairmentParams> &a, const std::optional<ImpairmentParams> &b);
bool operator==(const ExperimentSpec &a, const ExperimentSpec &b);

void to_json(nlohmann::json &j, const ExperimentSpec &s);
void from_json(const nlohmann::json &j, ExperimentSpec &s);

// Fills the command's unset fields with its defaults.
ExperimentSpec with_defaults(ExperimentSpec spec);

} // namespace beamnet::cli
