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
#include "experiment.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include <beamnet/error.hpp>

namespace beamnet::cli
{

using nlohmann::json;

namespace
{

constexpr double pi = std::numbers::pi;

const std::set<std::string> kCommands = {"avg-pattern", "realization", "directivity", "ccdf",
                                         "peak-outage", "impairments", "figure", "selftest"};
const std::set<std::string> kMethods = {"exact_cf", "precise_gaussian", "marcum", "rayleigh", "monte_carlo"};

void reject_unknown_keys(const json &j, std::initializer_list<const char *> keys, const char *where)
{
  if (!j.is_object())
    throw UsageError(std::string(where) + ": expected an object");
  for (const auto &item : j.items())
  {
    if (std::none_of(keys.begin(), keys.end(), [&](const char *k) { return item.key() == k; }))
      throw UsageError(std::string(where) + ": unknown key '" + item.key() + "'");
  }
}

template <class T>
void read_opt(const json &j, const char *key, T &out)
{
  if (auto it = j.find(key); it != j.end())
    it->get_to(out);
}

const char *unit_name(ThresholdUnit u) { return u == ThresholdUnit::linear ? "linear" : "normalized_db"; }

ThresholdUnit parse_unit(const std::string &s)
{
  if (s == "linear")
    return ThresholdUnit::linear;
  if (s == "normalized_db")
    return ThresholdUnit::normalized_db;
  throw UsageError("thresholds.unit must be 'linear' or 'normalized_db', got '" + s + "'");
}

OutputFormat parse_format(const std::string &s)
{
  if (s == "csv")
    return OutputFormat::csv;
  if (s == "json")
    return OutputFormat::json;
  throw UsageError("format must be 'csv' or 'json', got '" + s + "'");
}

json impairment_json(const ImpairmentParams &p)
{
  if (p.kind == ImpairmentKind::closed_loop)
    return {{"kind", "closed_loop"}, {"loop_snr", p.closed_loop.loop_snr}};
  return {{"kind", "open_loop"}, {"rmax_over_lambda", p.open_loop.rmax_over_lambda}, {"psi_max", p.open_loop.psi_max}};
}

ImpairmentParams parse_impairment(const json &j)
{
  ImpairmentParams p;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "closed_loop")
  {
    reject_unknown_keys(j, {"kind", "loop_snr"}, "impairment");
    p.kind = ImpairmentKind::closed_loop;
    p.closed_loop.loop_snr = j.at("loop_snr").get<double>();
  }
  else if (kind == "open_loop")
  {
    reject_unknown_keys(j, {"kind", "rmax_over_lambda", "psi_max"}, "impairment");
    p.kind = ImpairmentKind::open_loop;
    read_opt(j, "rmax_over_lambda", p.open_loop.rmax_over_lambda);
    read_opt(j, "psi_max", p.open_loop.psi_max);
  }
  else
  {
    throw UsageError("impairment.kind must be 'closed_loop' or 'open_loop', got '" + kind + "'");
  }
  return p;
}

} // namespace

bool same_array(const ArrayConfig &a, const ArrayConfig &b)
{
  return a.n_nodes == b.n_nodes && a.r_tilde == b.r_tilde && a.seed == b.seed;
}

bool same_impairment(const std::optional<ImpairmentParams> &a, const std::optional<ImpairmentParams> &b)
{
  if (!a || !b)
    return !a && !b;
  if (a->kind != b->kind)
    return false;
  if (a->kind == ImpairmentKind::closed_loop)
    return a->closed_loop.loop_snr == b->closed_loop.loop_snr;
  return a->open_loop.rmax_over_lambda == b->open_loop.rmax_over_lambda &&
         a->open_loop.psi_max == b->open_loop.psi_max;
}

bool operator==(const ExperimentSpec &a, const ExperimentSpec &b)
{
  return a.command == b.command && a.figure == b.figure && same_array(a.array, b.array) && a.angle_grid == b.angle_grid &&
         a.thresholds == b.thresholds && same_impairment(a.impairment, b.impairment) && a.trials == b.trials && a.phi == b.phi &&
         a.methods == b.methods && a.cf_grid == b.cf_grid && a.output_path == b.output_path && a.format == b.format;
}

void to_json(json &j, const ExperimentSpec &s)
{
  j = json{{"command", s.command},
           {"array", {{"n_nodes", s.array.n_nodes}, {"r_tilde", s.array.r_tilde}, {"seed", s.array.seed}}},
           {"angle_grid", {{"count", s.angle_grid.count}, {"lo", s.angle_grid.lo}, {"hi", s.angle_grid.hi}}},
           {"thresholds",
            {{"count", s.thresholds.count},
             {"lo", s.thresholds.lo},
             {"hi", s.thresholds.hi},
             {"unit", unit_name(s.thresholds.unit)}}},
           {"impairment", s.impairment ? impairment_json(*s.impairment) : json(nullptr)},
           {"trials", s.trials},
           {"phi", s.phi},
           {"methods", s.methods},
           {"cf_grid", s.cf_grid},
           {"output_path", s.output_path},
           {"format", s.format == OutputFormat::csv ? "csv" : "json"}};
  if (s.command == "figure")
    j["figure"] = s.figure;
}

void from_json(const json &j, ExperimentSpec &s)
{
  try
  {
    reject_unknown_keys(j,
                        {"command", "figure", "array", "angle_grid", "thresholds", "impairment", "trials", "phi",
                         "methods", "cf_grid", "output_path", "format"},
                        "config");
    s = ExperimentSpec{};
    s.command = j.at("command").get<std::string>();
    read_opt(j, "figure", s.figure);
    if (auto it = j.find("array"); it != j.end())
    {
      reject_unknown_keys(*it, {"n_nodes", "r_tilde", "seed"}, "array");
      read_opt(*it, "n_nodes", s.array.n_nodes);
      read_opt(*it, "r_tilde", s.array.r_tilde);
      read_opt(*it, "seed", s.array.seed);
    }
    if (auto it = j.find("angle_grid"); it != j.end())
    {
      reject_unknown_keys(*it, {"count", "lo", "hi"}, "angle_grid");
      read_opt(*it, "count", s.angle_grid.count);
      read_opt(*it, "lo", s.angle_grid.lo);
      read_opt(*it, "hi", s.angle_grid.hi);
    }
    if (auto it = j.find("thresholds"); it != j.end())
    {
      reject_unknown_keys(*it, {"count", "lo", "hi", "unit"}, "thresholds");
      read_opt(*it, "count", s.thresholds.count);
      read_opt(*it, "lo", s.thresholds.lo);
      read_opt(*it, "hi", s.thresholds.hi);
      if (auto u = it->find("unit"); u != it->end())
        s.thresholds.unit = parse_unit(u->get<std::string>());
    }
    if (auto it = j.find("impairment"); it != j.end() && !it->is_null())
      s.impairment = parse_impairment(*it);
    read_opt(j, "trials", s.trials);
    read_opt(j, "phi", s.phi);
    read_opt(j, "methods", s.methods);
    read_opt(j, "cf_grid", s.cf_grid);
    read_opt(j, "output_path", s.output_path);
    if (auto it = j.find("format"); it != j.end())
      s.format = parse_format(it->get<std::string>());
  }
  catch (const json::exception &e)
  {
    throw UsageError(std::string("config: ") + e.what());
  }
}

std::vector<double> ExperimentSpec::threshold_values() const
{
  std::vector<double> out = uniform_grid(thresholds.count, thresholds.lo, thresholds.hi);
  if (thresholds.unit == ThresholdUnit::normalized_db)
  {
    const double n = static_cast<double>(array.n_nodes);
    for (auto &t : out)
      t = std::pow(10.0, t / 10.0) / n;
  }
  return out;
}

void ExperimentSpec::validate() const
{
  if (!kCommands.count(command))
    throw UsageError("unknown command '" + command + "'");
  array.validate();
  if (command == "figure" && (figure < 2 || figure > 12))
    throw UsageError("figure number must lie in 2..12");
  for (const auto &m : methods)
  {
    if (!kMethods.count(m))
      throw UsageError("unknown ccdf method '" + m + "'");
  }
  if (angle_grid.count > 0 && !(angle_grid.lo <= angle_grid.hi))
    throw DomainError("angle_grid: lo must not exceed hi");
  if (thresholds.count > 0 && !(thresholds.lo <= thresholds.hi))
    throw DomainError("thresholds: lo must not exceed hi");
  if (thresholds.count > 0 && thresholds.unit == ThresholdUnit::linear && !(thresholds.lo >= 0.0))
    throw DomainError("thresholds: linear P0 must be non-negative");
  if (impairment)
  {
    if (impairment->kind == ImpairmentKind::closed_loop)
      impairment->closed_loop.validate();
    else
      impairment->open_loop.validate();
  }
  if (command == "impairments" && !impairment)
    throw UsageError("impairments: an impairment (closed_loop or open_loop) is required");
}

ExperimentSpec with_defaults(ExperimentSpec s)
{
  const auto &cmd = s.command;
  const bool angular = cmd == "avg-pattern" || cmd == "realization" || cmd == "impairments";
  if (angular && s.angle_grid.count == 0)
  {
    if (cmd == "impairments")
      s.angle_grid = {257, -0.3, 0.3};
    else
      s.angle_grid = {default_grid_size(s.array.r_tilde), -pi, pi};
  }
  if (cmd == "ccdf")
  {
    if (s.phi == 0.0)
      s.phi = pi / 4.0;
    if (s.thresholds.count == 0)
      s.thresholds = {61, -20.0, 10.0, ThresholdUnit::normalized_db};
    if (s.methods.empty())
    {
      s.methods = {"exact_cf", "precise_gaussian", "marcum", "rayleigh"};
      if (s.trials > 0)
        s.methods.push_back("monte_carlo");
    }
    if (s.cf_grid == 0)
      s.cf_grid = 1024;
  }
  if (cmd == "peak-outage")
  {
    if (s.thresholds.count == 0)
      s.thresholds = {29, 0.0, 14.0, ThresholdUnit::normalized_db};
    if (s.trials == 0)
      s.trials = 1000;
  }
  if (cmd == "directivity" && s.trials == 0)
    s.trials = 1000;
  return s;
}

} // namespace beamnet::cli
