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

#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <json.hpp>

namespace beamnet::cli
{

using Cell = std::variant<double, std::string>;

// Column-named result table. Angles are stored in degrees, powers in dB or linear
// as the column name says.
struct Table
{
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  nlohmann::json config; // echoed experiment config

  void add_row(std::vector<Cell> row);
};

inline constexpr std::string_view kCsvMagic = "# beamnet-sim v1";
inline constexpr double kDbFloor = -200.0;

// 10 log10(x), clamped at kDbFloor for zero and negative input.
double to_db(double linear);

// Shortest round-trip decimal form.
std::string format_number(double x);

void write_csv(std::ostream &out, const Table &table);
void write_json(std::ostream &out, const Table &table);

// Inverse of write_csv. Throws std::runtime_error on malformed input.
Table read_csv(std::istream &in);

} // namespace beamnet::cli
