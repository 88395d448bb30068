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
#include "run.hpp"

#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <beamnet/error.hpp>

#include "commands.hpp"

namespace beamnet::cli
{

namespace
{

constexpr double pi = std::numbers::pi;
constexpr int kExitUsage = 2;
constexpr int kExitNumeric = 3;

struct Flags
{
  std::string config;
  std::size_t n_nodes = 0;
  double r_tilde = 0.0;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t points = 0;
  double phi_min_deg = 0.0;
  double phi_max_deg = 0.0;
  double phi_deg = 0.0;
  std::size_t threshold_count = 0;
  double threshold_lo = 0.0;
  double threshold_hi = 0.0;
  std::string threshold_unit;
  std::vector<std::string> methods;
  std::size_t cf_grid = 0;
  double loop_snr = 0.0;
  double rmax = 0.0;
  double psi_max_deg = 0.0;
  std::string output;
  std::string format;
  unsigned threads = 0;
  int figure = 0;
  bool dump_config = false;
};

void add_common(CLI::App *sub, Flags &f)
{
  sub->add_option("--config", f.config, "JSON experiment config; flags override its fields");
  sub->add_option("--seed", f.seed, "Master seed of every random stream");
  sub->add_option("-o,--output", f.output, "Output file, '-' for stdout");
  sub->add_option("--format", f.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--threads", f.threads, "Worker count (BEAMNET_THREADS takes precedence)")
      ->check(CLI::PositiveNumber);
  sub->add_flag("--dump-config", f.dump_config, "Print the expanded config and exit");
}

void add_array(CLI::App *sub, Flags &f)
{
  sub->add_option("--n", f.n_nodes, "Number of nodes");
  sub->add_option("--rtilde", f.r_tilde, "Disk radius in wavelengths");
  sub->add_option("--trials", f.trials, "Monte Carlo realizations");
}

void add_angles(CLI::App *sub, Flags &f)
{
  sub->add_option("--points", f.points, "Angle grid size");
  sub->add_option("--phi-min-deg", f.phi_min_deg, "Angle grid start in degrees");
  sub->add_option("--phi-max-deg", f.phi_max_deg, "Angle grid end in degrees");
}

void add_thresholds(CLI::App *sub, Flags &f)
{
  sub->add_option("--threshold-count", f.threshold_count, "Threshold grid size");
  sub->add_option("--threshold-min", f.threshold_lo, "Threshold grid start");
  sub->add_option("--threshold-max", f.threshold_hi, "Threshold grid end");
  sub->add_option("--threshold-unit", f.threshold_unit, "linear (P0) or normalized_db (10 log10 N P0)")
      ->check(CLI::IsMember({"linear", "normalized_db"}));
}

bool given(const CLI::App *sub, const std::string &name)
{
  const auto *opt = sub->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

ExperimentSpec load_config(const std::string &path)
{
  std::ifstream in(path);
  if (!in)
    throw UsageError("cannot open config file '" + path + "'");
  nlohmann::json j;
  try
  {
    in >> j;
  }
  catch (const nlohmann::json::exception &e)
  {
    throw UsageError("config file '" + path + "': " + e.what());
  }
  return j.get<ExperimentSpec>();
}

ExperimentSpec expand(const CLI::App *sub, const Flags &f)
{
  ExperimentSpec s;
  if (given(sub, "--config"))
  {
    s = load_config(f.config);
    if (s.command != sub->get_name())
      throw UsageError("config command '" + s.command + "' does not match subcommand '" + sub->get_name() + "'");
  }
  s.command = sub->get_name();
  if (given(sub, "number"))
    s.figure = f.figure;
  if (given(sub, "--n"))
    s.array.n_nodes = f.n_nodes;
  if (given(sub, "--rtilde"))
    s.array.r_tilde = f.r_tilde;
  if (given(sub, "--seed"))
    s.array.seed = f.seed;
  if (given(sub, "--trials"))
    s.trials = f.trials;
  if (given(sub, "--points") || given(sub, "--phi-min-deg") || given(sub, "--phi-max-deg"))
  {
    if (s.angle_grid.count == 0)
      s.angle_grid = {0, -pi, pi};
    if (given(sub, "--points"))
      s.angle_grid.count = f.points;
    if (given(sub, "--phi-min-deg"))
      s.angle_grid.lo = f.phi_min_deg * pi / 180.0;
    if (given(sub, "--phi-max-deg"))
      s.angle_grid.hi = f.phi_max_deg * pi / 180.0;
    if (s.angle_grid.count == 0)
      s.angle_grid.count = default_grid_size(s.array.r_tilde);
  }
  if (given(sub, "--phi-deg"))
    s.phi = f.phi_deg * pi / 180.0;
  if (given(sub, "--threshold-count"))
    s.thresholds.count = f.threshold_count;
  if (given(sub, "--threshold-min"))
    s.thresholds.lo = f.threshold_lo;
  if (given(sub, "--threshold-max"))
    s.thresholds.hi = f.threshold_hi;
  if (given(sub, "--threshold-unit"))
    s.thresholds.unit = f.threshold_unit == "linear" ? ThresholdUnit::linear : ThresholdUnit::normalized_db;
  if (given(sub, "--method"))
    s.methods = f.methods;
  if (given(sub, "--cf-grid"))
    s.cf_grid = f.cf_grid;
  if (given(sub, "--loop-snr"))
  {
    ImpairmentParams p;
    p.kind = ImpairmentKind::closed_loop;
    p.closed_loop.loop_snr = f.loop_snr;
    s.impairment = p;
  }
  if (given(sub, "--rmax") || given(sub, "--psi-max-deg"))
  {
    ImpairmentParams p;
    p.kind = ImpairmentKind::open_loop;
    p.open_loop.rmax_over_lambda = f.rmax;
    p.open_loop.psi_max = f.psi_max_deg * pi / 180.0;
    s.impairment = p;
  }
  if (given(sub, "--output"))
    s.output_path = f.output;
  if (given(sub, "--format"))
    s.format = f.format == "json" ? OutputFormat::json : OutputFormat::csv;
  s = with_defaults(std::move(s));
  s.validate();
  return s;
}

Workers pick_workers(const CLI::App *sub, const Flags &f)
{
  if (std::getenv("BEAMNET_THREADS") == nullptr && given(sub, "--threads"))
    return Workers{f.threads};
  return Workers::from_environment();
}

void emit(const Table &t, const ExperimentSpec &s, std::ostream &out)
{
  std::ofstream file;
  std::ostream *dst = &out;
  if (s.output_path != "-")
  {
    file.open(s.output_path, std::ios::binary);
    if (!file)
      throw UsageError("cannot open output file '" + s.output_path + "'");
    dst = &file;
  }
  if (s.format == OutputFormat::json)
    write_json(*dst, t);
  else
    write_csv(*dst, t);
  dst->flush();
  if (!*dst)
    throw UsageError("failed writing output to '" + s.output_path + "'");
}

int report(std::ostream &err, const char *kind, const std::string &message, int code)
{
  err << nlohmann::json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << '\n';
  return code;
}

int exit_code(ErrorKind kind)
{
  return (kind == ErrorKind::numeric || kind == ErrorKind::resolution) ? kExitNumeric : kExitUsage;
}

} // namespace

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err)
{
  CLI::App app{"beamnet: beampattern statistics of random collaborative sensor arrays", "beamnet"};
  app.require_subcommand(1);
  app.fallthrough(false);
  Flags f;

  auto *avg = app.add_subcommand("avg-pattern", "Average beampattern, optionally with a Monte Carlo mean");
  add_common(avg, f);
  add_array(avg, f);
  add_angles(avg, f);

  auto *real = app.add_subcommand("realization", "Beampattern of one seeded realization");
  add_common(real, f);
  add_array(real, f);
  add_angles(real, f);

  auto *dir = app.add_subcommand("directivity", "Monte Carlo directivity against the analytic lower bound");
  add_common(dir, f);
  add_array(dir, f);

  auto *cc = app.add_subcommand("ccdf", "Beampattern CCDF at one angle");
  add_common(cc, f);
  add_array(cc, f);
  add_thresholds(cc, f);
  cc->add_option("--phi-deg", f.phi_deg, "Look angle in degrees");
  cc->add_option("--method", f.methods, "exact_cf, precise_gaussian, marcum, rayleigh, monte_carlo")
      ->check(CLI::IsMember({"exact_cf", "precise_gaussian", "marcum", "rayleigh", "monte_carlo"}));
  cc->add_option("--cf-grid", f.cf_grid, "Characteristic function grid size (power of two)");

  auto *peak = app.add_subcommand("peak-outage", "Peak-sidelobe outage: Monte Carlo against the crossing bound");
  add_common(peak, f);
  add_array(peak, f);
  add_thresholds(peak, f);

  auto *imp = app.add_subcommand("impairments", "Phase-noise or location-error degraded pattern");
  add_common(imp, f);
  add_array(imp, f);
  add_angles(imp, f);
  imp->add_option("--loop-snr", f.loop_snr, "Closed-loop phase-locked loop SNR (linear)");
  imp->add_option("--rmax", f.rmax, "Open-loop radial error bound in wavelengths");
  imp->add_option("--psi-max-deg", f.psi_max_deg, "Open-loop angular error bound in degrees");

  auto *fig = app.add_subcommand("figure", "Regenerate a preset figure data set");
  add_common(fig, f);
  fig->add_option("number", f.figure, "Figure number, 2..12")->required()->check(CLI::Range(2, 12));
  fig->add_option("--trials", f.trials, "Monte Carlo realizations (figure default if omitted)");

  auto *self = app.add_subcommand("selftest", "Re-derive the published constants and run oracle cross-checks");
  add_common(self, f);

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::CallForHelp &)
  {
    out << app.help();
    return 0;
  }
  catch (const CLI::CallForAllHelp &)
  {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  }
  catch (const CLI::ParseError &e)
  {
    return report(err, "usage", e.what(), kExitUsage);
  }

  const CLI::App *sub = app.get_subcommands().front();
  try
  {
    const ExperimentSpec spec = expand(sub, f);
    if (f.dump_config)
    {
      out << nlohmann::json(spec).dump(2) << '\n';
      return 0;
    }
    const Table table = run_experiment(spec, pick_workers(sub, f));
    emit(table, spec, out);
    if (spec.command == "selftest" && !selftest_passed(table))
      return report(err, "numeric", "selftest: at least one check failed", kExitNumeric);
    return 0;
  }
  catch (const UsageError &e)
  {
    return report(err, "usage", e.what(), kExitUsage);
  }
  catch (const Error &e)
  {
    return report(err, to_string(e.kind()), e.what(), exit_code(e.kind()));
  }
  catch (const std::exception &e)
  {
    return report(err, "internal", e.what(), kExitNumeric);
  }
}

} // namespace beamnet::cli
