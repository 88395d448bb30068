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
#include "commands.hpp"

#include <cmath>
#include <numbers>

#include <beamnet/beamnet.hpp>

namespace beamnet::cli
{

namespace
{

constexpr double pi = std::numbers::pi;

double deg(double rad) { return rad * 180.0 / pi; }

std::vector<double> log_grid(std::size_t count, double lo, double hi)
{
  auto out = uniform_grid(count, std::log10(lo), std::log10(hi));
  for (auto &x : out)
    x = std::pow(10.0, x);
  return out;
}

double threshold_db(double p0, std::size_t n_nodes) { return to_db(static_cast<double>(n_nodes) * p0); }

std::vector<double> angle_grid(const ExperimentSpec &s)
{
  return uniform_grid(s.angle_grid.count, s.angle_grid.lo, s.angle_grid.hi);
}

Table avg_pattern(const ExperimentSpec &s, const Workers &workers)
{
  const auto grid = angle_grid(s);
  const std::size_t n = s.array.n_nodes;
  const double r = s.array.r_tilde;
  Table t;
  t.columns = {"angle_deg", "power", "power_db"};
  PatternCurve mc;
  if (s.trials > 0)
  {
    mc = mc_mean_pattern(s.array, grid, s.trials, workers);
    t.columns.insert(t.columns.end(), {"mc_power", "mc_std_error", "mc_power_db"});
  }
  for (std::size_t i = 0; i < grid.size(); ++i)
  {
    const double p = average_pattern(n, r, grid[i]);
    std::vector<Cell> row{deg(grid[i]), p, to_db(p)};
    if (s.trials > 0)
      row.insert(row.end(), {mc.power[i], mc.std_error[i], to_db(mc.power[i])});
    t.add_row(std::move(row));
  }
  return t;
}

Table realization(const ExperimentSpec &s)
{
  const auto grid = angle_grid(s);
  const auto nodes = sample_realization(s.array, 0);
  const auto curve = beampattern(nodes, grid, s.array.r_tilde);
  Table t;
  t.columns = {"angle_deg", "power_db", "average_db"};
  for (std::size_t i = 0; i < grid.size(); ++i)
    t.add_row({deg(grid[i]), to_db(curve.power[i]), to_db(average_pattern(s.array.n_nodes, s.array.r_tilde, grid[i]))});
  return t;
}

Table directivity(const ExperimentSpec &s, const Workers &workers)
{
  const auto rep = directivity_report(s.array, s.trials, {}, workers);
  const double n = static_cast<double>(rep.n_nodes);
  Table t;
  t.columns = {"n_nodes",        "r_tilde",       "trials",           "d_av_mc",          "d_av_mc_std_error",
               "d_tilde_av",     "d_av_mc_over_n", "d_tilde_av_over_n", "theorem1_over_n", "jensen_holds"};
  const bool jensen = rep.d_tilde_av <= rep.d_av_mc.mean + 3.0 * rep.d_av_mc.std_error;
  t.add_row({n, rep.r_tilde, static_cast<double>(rep.d_av_mc.count), rep.d_av_mc.mean, rep.d_av_mc.std_error,
             rep.d_tilde_av, rep.d_av_mc.mean / n, rep.d_tilde_av / n, rep.theorem1_bound, jensen ? 1.0 : 0.0});
  return t;
}

CcdfCurve ccdf_curve(const std::string &method, const ExperimentSpec &s, std::span<const double> thr,
                     const Workers &workers)
{
  const std::size_t n = s.array.n_nodes;
  const double a = alpha(s.phi, s.array.r_tilde);
  if (method == "exact_cf")
    return exact_ccdf(n, a, thr, s.cf_grid, {}, workers);
  if (method == "precise_gaussian")
    return ccdf_precise_gaussian(gaussian_moments(n, a), thr);
  if (method == "marcum")
    return ccdf_marcum(gaussian_moments(n, a), thr);
  if (method == "rayleigh")
    return ccdf_rayleigh(n, thr);
  if (s.trials < 1)
    throw UsageError("ccdf: method monte_carlo needs trials >= 1");
  return mc_ccdf(s.array, s.phi, thr, s.trials, workers);
}

Table ccdf(const ExperimentSpec &s, const Workers &workers)
{
  const auto thr = s.threshold_values();
  Table t;
  t.columns = {"p0", "threshold_db"};
  std::vector<CcdfCurve> curves;
  for (const auto &m : s.methods)
  {
    curves.push_back(ccdf_curve(m, s, thr, workers));
    t.columns.push_back(m);
    if (m == "monte_carlo")
      t.columns.push_back("monte_carlo_std_error");
  }
  for (std::size_t i = 0; i < thr.size(); ++i)
  {
    std::vector<Cell> row{thr[i], threshold_db(thr[i], s.array.n_nodes)};
    for (const auto &c : curves)
    {
      row.emplace_back(c.probs[i]);
      if (c.method == CcdfMethod::monte_carlo)
        row.emplace_back(c.std_errors[i]);
    }
    t.add_row(std::move(row));
  }
  return t;
}

Table peak_outage(const ExperimentSpec &s, const Workers &workers)
{
  const auto thr = s.threshold_values();
  const auto region = sidelobe_region(s.array.n_nodes, s.array.r_tilde);
  const auto mc = mc_peak_outage(s.array, thr, s.trials, {}, workers);
  Table t;
  t.columns = {"p0", "threshold_db", "bound", "monte_carlo", "monte_carlo_std_error"};
  for (std::size_t i = 0; i < thr.size(); ++i)
  {
    const OutageQuery q{s.array.n_nodes, s.array.r_tilde, thr[i]};
    // The bound is only defined above N P0 = 1/2.
    const double bound = q.normalized_p0() > 0.5 ? outage_upper_bound(q, region) : 1.0;
    t.add_row({thr[i], threshold_db(thr[i], s.array.n_nodes), bound, mc.probs[i], mc.std_errors[i]});
  }
  return t;
}

Table impairments(const ExperimentSpec &s, const Workers &workers)
{
  const auto grid = angle_grid(s);
  const auto &p = *s.impairment;
  const std::size_t n = s.array.n_nodes;
  const double r = s.array.r_tilde;
  Table t;
  t.columns = {"angle_deg", "unimpaired_db", "impaired_db", "attenuation_db"};
  PatternCurve mc;
  if (s.trials > 0)
  {
    mc = mc_impaired_pattern(s.array, grid, p, s.trials, workers);
    t.columns.insert(t.columns.end(), {"mc_power_db", "mc_power", "mc_std_error"});
  }
  const double radial = p.kind == ImpairmentKind::open_loop ? attenuation_radial(p.open_loop) : 1.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
  {
    const double phi = grid[i];
    const double amp = p.kind == ImpairmentKind::closed_loop ? attenuation_phase(p.closed_loop)
                                                             : radial * attenuation_angle(phi, p.open_loop, r);
    std::vector<Cell> row{deg(phi), to_db(average_pattern(n, r, phi)), to_db(avg_pattern_impaired(n, r, phi, p)),
                          to_db(amp * amp)};
    if (s.trials > 0)
      row.insert(row.end(), {to_db(mc.power[i]), mc.power[i], mc.std_error[i]});
    t.add_row(std::move(row));
  }
  return t;
}

// Figure presets 2..12.

Table figure_avg_patterns()
{
  Table t;
  t.columns = {"n_nodes", "r_tilde", "angle_deg", "power_db"};
  const auto grid = uniform_grid(1441, 0.0, pi);
  for (std::size_t n : {16, 256})
    for (double r : {1.0, 2.0, 8.0})
      for (double phi : grid)
        t.add_row({static_cast<double>(n), r, deg(phi), to_db(average_pattern(n, r, phi))});
  return t;
}

Table figure_threshold_angles()
{
  Table t;
  t.columns = {"n_nodes", "r_tilde", "beamwidth_3db_deg", "sidelobe_start_deg"};
  for (std::size_t n : {16, 64, 256, 1024})
    for (double r : log_grid(41, 1.0, 100.0))
    {
      // No sidelobe region exists when the floor 1/N sits within 3 dB of the whole visible range.
      double start = std::nan("");
      try
      {
        start = deg(sidelobe_region(n, r).phi_zero);
      }
      catch (const RegionError &)
      {
      }
      t.add_row({static_cast<double>(n), r, deg(beamwidth_3db(r)), start});
    }
  return t;
}

Table figure_directivity_vs_radius(const ExperimentSpec &s, const Workers &workers)
{
  Table t;
  t.columns = {"n_nodes", "r_tilde", "d_tilde_av_over_n", "d_av_mc_over_n", "d_av_mc_std_error_over_n"};
  for (std::size_t n : {16, 256})
    for (double r : {0.25, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 128.0})
    {
      const ArrayConfig cfg{n, r, s.array.seed};
      const double nd = static_cast<double>(n);
      const auto mc = mc_average_directivity(cfg, s.trials, workers);
      t.add_row({nd, r, directivity_lower(n, r) / nd, mc.mean / nd, mc.std_error / nd});
    }
  return t;
}

Table figure_directivity_vs_density()
{
  Table t;
  t.columns = {"n_nodes", "density", "r_tilde", "d_tilde_av_over_n", "theorem1_over_n", "theorem1_limit_over_n"};
  for (std::size_t n : {16, 256})
    for (double density : log_grid(31, 0.1, 100.0))
    {
      const double r = static_cast<double>(n) / density;
      t.add_row({static_cast<double>(n), density, r, directivity_lower(n, r) / static_cast<double>(n),
                 theorem1_bound(n, r), theorem1_bound_limit(n, r)});
    }
  return t;
}

Table figure_average_and_realization(const ExperimentSpec &s)
{
  ExperimentSpec one = s;
  one.array = {16, 2.0, s.array.seed};
  one.angle_grid = {default_grid_size(2.0), -pi, pi};
  return realization(one);
}

Table figure_ccdf_offbeam(const ExperimentSpec &s, const Workers &workers)
{
  Table t;
  t.columns = {"n_nodes", "threshold_db", "p0", "exact_cf", "marcum", "rayleigh", "monte_carlo",
               "monte_carlo_std_error"};
  for (std::size_t n : {16, 1024})
  {
    ExperimentSpec one = s;
    one.array = {n, 2.0, s.array.seed};
    one.phi = pi / 4.0;
    one.thresholds = {61, -20.0, 10.0, ThresholdUnit::normalized_db};
    one.cf_grid = kDefaultCfGrid;
    const auto thr = one.threshold_values();
    const auto exact = ccdf_curve("exact_cf", one, thr, workers);
    const auto marcum = ccdf_curve("marcum", one, thr, workers);
    const auto rayleigh = ccdf_curve("rayleigh", one, thr, workers);
    const auto mc = ccdf_curve("monte_carlo", one, thr, workers);
    for (std::size_t i = 0; i < thr.size(); ++i)
      t.add_row({static_cast<double>(n), threshold_db(thr[i], n), thr[i], exact.probs[i], marcum.probs[i],
                 rayleigh.probs[i], mc.probs[i], mc.std_errors[i]});
  }
  return t;
}

Table figure_ccdf_mainbeam(const ExperimentSpec &s, const Workers &workers)
{
  Table t;
  t.columns = {"n_nodes", "p0", "p0_db", "exact_cf", "precise_gaussian", "marcum"};
  const double r = 2.0;
  for (std::size_t n : {16, 64, 256, 1024})
  {
    ExperimentSpec one = s;
    one.array = {n, r, s.array.seed};
    one.phi = beamwidth_3db(r);
    one.thresholds = {101, 0.0, 1.0, ThresholdUnit::linear};
    one.cf_grid = kDefaultCfGrid;
    const auto thr = one.threshold_values();
    const auto exact = ccdf_curve("exact_cf", one, thr, workers);
    const auto precise = ccdf_curve("precise_gaussian", one, thr, workers);
    const auto marcum = ccdf_curve("marcum", one, thr, workers);
    for (std::size_t i = 0; i < thr.size(); ++i)
      t.add_row({static_cast<double>(n), thr[i], to_db(thr[i]), exact.probs[i], precise.probs[i], marcum.probs[i]});
  }
  return t;
}

Table figure_peak_outage(const ExperimentSpec &s, const Workers &workers)
{
  Table t;
  t.columns = {"n_nodes", "r_tilde", "threshold_db", "bound", "monte_carlo", "monte_carlo_std_error"};
  for (std::size_t n : {32, 128})
  {
    ExperimentSpec one = s;
    one.array = {n, static_cast<double>(n) / 2.0, s.array.seed};
    one.thresholds = {29, 0.0, 14.0, ThresholdUnit::normalized_db};
    const auto sub = peak_outage(one, workers);
    for (const auto &row : sub.rows)
      t.add_row({static_cast<double>(n), one.array.r_tilde, row[1], row[2], row[3], row[4]});
  }
  return t;
}

Table figure_outage_threshold()
{
  Table t;
  t.columns = {"p_out", "r_tilde", "threshold_db"};
  for (double p_out : {1e-3, 1e-2, 1e-1})
    for (double r : log_grid(41, 1.0, 100.0))
      t.add_row({p_out, r, to_db(threshold_for_outage(p_out, r))});
  return t;
}

Table figure_closed_loop()
{
  Table t;
  t.columns = {"loop_snr_db", "attenuation_db"};
  for (double snr_db : uniform_grid(101, -5.0, 20.0))
    t.add_row({snr_db, to_db(std::pow(attenuation_phase({std::pow(10.0, snr_db / 10.0)}), 2))});
  return t;
}

Table figure_open_loop()
{
  Table t;
  t.columns = {"series", "x", "attenuation_db"};
  for (double x : uniform_grid(101, 0.0, 1.0))
    t.add_row({std::string("radial"), x, to_db(std::pow(attenuation_radial({x, 0.0}), 2))});
  // x = R psi_max / lambda at a large radius, where sin(psi) ~ psi holds over the range.
  const double r = 16.0;
  for (double x : uniform_grid(101, 0.0, 1.5))
    t.add_row({std::string("angle"), x, to_db(std::pow(attenuation_angle(0.0, {0.0, x / r}, r), 2))});
  return t;
}

} // namespace

Table run_experiment(const ExperimentSpec &input, const Workers &workers)
{
  input.validate();
  ExperimentSpec spec = input;
  if (spec.command == "figure" && spec.trials == 0)
    spec.trials = figure_default_trials(spec.figure);
  Table t;
  const auto &c = spec.command;
  if (c == "avg-pattern")
    t = avg_pattern(spec, workers);
  else if (c == "realization")
    t = realization(spec);
  else if (c == "directivity")
    t = directivity(spec, workers);
  else if (c == "ccdf")
    t = ccdf(spec, workers);
  else if (c == "peak-outage")
    t = peak_outage(spec, workers);
  else if (c == "impairments")
    t = impairments(spec, workers);
  else if (c == "figure")
    t = run_figure(spec, workers);
  else if (c == "selftest")
    t = run_selftest();
  else
    throw UsageError("unknown command '" + c + "'");
  t.config = spec;
  return t;
}

std::size_t figure_default_trials(int figure)
{
  switch (figure)
  {
  case 4:
    return 1000;
  case 7:
    return 100000;
  case 9:
    return 10000;
  default:
    return 0;
  }
}

Table run_figure(const ExperimentSpec &spec, const Workers &workers)
{
  ExperimentSpec s = spec;
  if (s.trials == 0)
    s.trials = figure_default_trials(s.figure);
  switch (s.figure)
  {
  case 2:
    return figure_avg_patterns();
  case 3:
    return figure_threshold_angles();
  case 4:
    return figure_directivity_vs_radius(s, workers);
  case 5:
    return figure_directivity_vs_density();
  case 6:
    return figure_average_and_realization(s);
  case 7:
    return figure_ccdf_offbeam(s, workers);
  case 8:
    return figure_ccdf_mainbeam(s, workers);
  case 9:
    return figure_peak_outage(s, workers);
  case 10:
    return figure_outage_threshold();
  case 11:
    return figure_closed_loop();
  case 12:
    return figure_open_loop();
  default:
    throw UsageError("figure number must lie in 2..12");
  }
}

Table run_selftest()
{
  Table t;
  t.columns = {"check", "value", "reference", "tolerance", "pass"};
  auto add = [&](const std::string &name, double value, double reference, double tol) {
    const bool ok = std::fabs(value - reference) <= tol;
    t.add_row({name, value, reference, tol, ok ? 1.0 : 0.0});
  };
  auto add_rel = [&](const std::string &name, double value, double reference, double tol) {
    const bool ok = std::fabs(value - reference) <= tol * std::fabs(reference);
    t.add_row({name, value, reference, tol, ok ? 1.0 : 0.0});
  };

  const auto lemma = lemma1_constants();
  add("beamwidth_constant", beamwidth_constant(), 0.1286, 1e-3);
  add("lemma1_x0", lemma.x0, 2.4445, 1e-3);
  add("lemma1_alpha0", lemma.alpha0, 0.4664, 1e-3);
  add("lemma1_c0", lemma.c0, 1.1727, 1e-3);

  for (double x : {0.5, 7.3, 25.0})
  {
    add("bessel_j0_at_" + format_number(x), specfun::bessel_j0(x), std::cyl_bessel_j(0.0, x), 1e-12);
    add("bessel_j1_at_" + format_number(x), specfun::bessel_j1(x), std::cyl_bessel_j(1.0, x), 1e-12);
  }
  add("marcum_q1_zero_a", specfun::marcum_q1(0.0, 1.7), std::exp(-0.5 * 1.7 * 1.7), 1e-12);
  add_rel("directivity_series_vs_quadrature", directivity_lower_closed(16, 2.0), directivity_lower(16, 2.0), 1e-6);
  add("beamwidth_half_power", average_pattern(1u << 20, 4.0, beamwidth_3db(4.0)), 0.5, 1e-3);
  add("exact_density_mass", exact_joint_density(16, 2.0, kDefaultCfGrid).total_mass(), 1.0, 1e-6);
  add_rel("outage_threshold_round_trip", outage_bound_simplified(threshold_for_outage(0.01, 10.0), 10.0), 0.01,
          1e-10);
  add("closed_loop_3db_point", to_db(std::pow(attenuation_phase({std::pow(10.0, 0.3)}), 2)), -3.0, 0.5);
  return t;
}

bool selftest_passed(const Table &table)
{
  const auto col = table.columns.size() - 1;
  for (const auto &row : table.rows)
  {
    if (std::get<double>(row[col]) != 1.0)
      return false;
  }
  return !table.rows.empty();
}

} // namespace beamnet::cli
