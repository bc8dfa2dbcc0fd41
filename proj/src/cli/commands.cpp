// Copyright 2026 The catgate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <functional>
#include <ostream>

#include "catgate/analysis.hpp"
#include "catgate/cli.hpp"
#include "catgate/cubic.hpp"
#include "catgate/gate.hpp"
#include "catgate/kernels.hpp"
#include "catgate/matching.hpp"
#include "catgate/numerics.hpp"
#include "catgate/semiclassical.hpp"
#include "catgate/states.hpp"
#include "catgate/version.hpp"
#include "cli/output.hpp"

namespace catgate::cli {

namespace {

struct Globals {
  std::optional<std::string> grid;
  std::optional<std::string> out;
};

/// Target-state selection shared by collapse and wigner.
struct StateArgs {
  std::optional<int> fock;
  std::optional<std::string> cubic;
  double ym = 0.0;
  bool vacuum = false;
  std::string route = "closed";
  int ref_n = cubic::kReferencePhotonNumber;
};

struct WignerArgs {
  std::string x = "-8..8";
  double y_max = 8.0;
  std::size_t stride = 1;
  std::size_t padding = 2;
};

struct ScanArgs {
  std::optional<std::string> fock;
  std::optional<std::string> cubic;
  std::optional<std::string> y;
  std::optional<std::string> d;
  std::optional<std::string> s;
  std::optional<double> gamma;
  std::optional<double> ym;
  double step = 0.0;
  int nodes = 64;
  int ref_n = cubic::kReferencePhotonNumber;
};

struct MatchArgs {
  int kmax = 9;
  std::string objective = "linearized";
  double s = 0.05;
  std::optional<double> gamma;
  std::optional<double> ym;
  std::optional<double> probability;
  std::optional<double> infidelity;
  double tol = 1e-3;
  int ref_n = cubic::kReferencePhotonNumber;
  int fock = cubic::kReferencePhotonNumber;
  std::optional<int> entry;
  std::optional<std::string> cubic;
  std::optional<double> fixed_s;
  std::string match = "probability";
  bool wigner = false;
};

/// What a command produced: the JSON summary (also the sidecar body).
struct Outcome {
  Json summary;
};

Json header(const std::string& command, const Grid& grid, Json parameters) {
  Json j;
  j["tool"] = "catgate";
  j["version"] = kVersion;
  j["command"] = command;
  parameters["grid"] = {{"x_min", grid.x_min()}, {"x_max", grid.x_max()}, {"n", grid.size()}};
  j["parameters"] = std::move(parameters);
  return j;
}

std::vector<std::string> comments(const Json& head, const std::string& curve) {
  return {std::string("catgate ") + kVersion + " " + head["command"].get<std::string>(), curve,
          "parameters " + head["parameters"].dump()};
}

FactorRoute parse_route(const std::string& r) {
  if (r == "closed") return FactorRoute::ClosedForm;
  if (r == "quadrature") return FactorRoute::Quadrature;
  throw UsageError("route must be 'closed' or 'quadrature'");
}

double sqrt_support(int n) { return std::sqrt(2.0 * n + 1.0); }

Json fidelity_block(const WaveFunction& psi_out, int n, double y_m) {
  Json f;
  const double cat = analysis::fidelity_cat(psi_out, n);
  f["reference_n"] = n;
  f["F_cat"] = json_number(cat);
  f["infidelity_cat"] = json_number(1.0 - cat);
  if (y_m * y_m < 2.0 * n + 1.0) {
    const double coh = analysis::fidelity_coh(psi_out, n, y_m);
    f["F_coh"] = json_number(coh);
    f["infidelity_coh"] = json_number(1.0 - coh);
  }
  return f;
}

// ---------------------------------------------------------------- collapse

Outcome cmd_collapse(const Globals& g, const StateArgs& a, const std::string& prefix) {
  const Grid grid = resolve_grid(g.grid);
  const WaveFunction vac = states::make_vacuum(grid);
  const FactorRoute route = parse_route(a.route);
  Json params;
  CollapseResult r{WaveFunction(grid), 0.0, 0.0, ResourceSpec::fock(0)};
  int ref_n = a.ref_n;
  if (a.cubic) {
    const CubicGateConfig cfg = parse_cubic(*a.cubic);
    params["resource"] = {{"type", "cubic"}, {"gamma", cfg.gamma}, {"s", cfg.s}};
    params["y_m"] = cfg.y_m;
    r = cubic::cubic_collapse(vac, cfg, route);
  } else if (a.fock) {
    params["resource"] = {{"type", "fock"}, {"n", *a.fock}};
    params["y_m"] = a.ym;
    r = gate::collapse(vac, ResourceSpec::fock(*a.fock), a.ym, route);
    ref_n = *a.fock;
  } else {
    throw UsageError("collapse needs --fock N or --cubic gamma,ym,s");
  }
  params["route"] = a.route;
  params["input"] = "vacuum";

  Json doc = header("collapse", grid, params);
  const double P = gate::probability_density(vac, r.resource, r.y_m, route);
  Json res;
  res["y_m"] = json_number(r.y_m);
  res["norm_N"] = json_number(r.norm_N);
  res["P"] = json_number(P);
  res["fidelities"] = fidelity_block(r.psi_out, ref_n, r.resource.is_fock() ? r.y_m : 0.0);
  doc["results"] = res;

  CsvWriter csv(prefix + ".csv", comments(doc, "collapsed output wavefunction psi_out(x)"),
                {"x", "re", "im", "abs2"});
  for (std::size_t i = 0; i < grid.size(); ++i) {
    csv.row({grid[i], r.psi_out[i].real(), r.psi_out[i].imag(), std::norm(r.psi_out[i])});
  }
  csv.close();
  doc["files"] = {{"csv", prefix + ".csv"}};
  return {doc};
}

// ------------------------------------------------------------------ wigner

Outcome cmd_wigner(const Globals& g, const StateArgs& a, const WignerArgs& w,
                   const std::string& prefix) {
  const Grid grid = resolve_grid(g.grid);
  const WaveFunction vac = states::make_vacuum(grid);
  Json params;
  WaveFunction psi = vac;
  if (a.cubic) {
    const CubicGateConfig cfg = parse_cubic(*a.cubic);
    params["state"] = {{"type", "cubic_output"}, {"gamma", cfg.gamma}, {"y_m", cfg.y_m},
                       {"s", cfg.s}};
    psi = cubic::cubic_collapse(vac, cfg).psi_out;
  } else if (a.fock) {
    params["state"] = {{"type", "fock_output"}, {"n", *a.fock}, {"y_m", a.ym}};
    psi = gate::collapse(vac, ResourceSpec::fock(*a.fock), a.ym).psi_out;
  } else {
    params["state"] = {{"type", "vacuum"}};
  }
  const Range xr = parse_range(w.x);
  const WignerAxes axes{xr.lo, xr.hi, w.stride, w.y_max, w.padding};
  params["axes"] = {{"x_min", axes.x_min}, {"x_max", axes.x_max}, {"x_stride", axes.x_stride},
                    {"y_max", axes.y_max}, {"padding", axes.padding}};

  const WignerGrid wg = analysis::wigner(psi, axes);
  const WignerStats st = analysis::wigner_stats(wg, psi);
  Json doc = header("wigner", grid, params);
  doc["results"] = {
      {"x_axis", {{"min", wg.x_axis.x_min()}, {"max", wg.x_axis.x_max()}, {"n", wg.x_axis.size()}}},
      {"y_axis", {{"min", wg.y_axis.x_min()}, {"max", wg.y_axis.x_max()}, {"n", wg.y_axis.size()}}},
      {"integral", json_number(st.integral)},
      {"normalization_residual", json_number(std::abs(st.integral - 1.0))},
      {"min", json_number(st.min)},
      {"max", json_number(st.max)},
      {"max_imag", json_number(st.max_imag)},
      {"marginal_x_error", json_number(st.marginal_x_error)},
      {"marginal_y_error", json_number(st.marginal_y_error)}};

  CsvWriter csv(prefix + ".csv", comments(doc, "Wigner function W(x, y) on a phase-space grid"),
                {"x", "y", "W"});
  for (std::size_t i = 0; i < wg.x_axis.size(); ++i) {
    for (std::size_t k = 0; k < wg.y_axis.size(); ++k) {
      csv.row({wg.x_axis[i], wg.y_axis[k], wg.at(i, k)});
    }
  }
  csv.close();
  doc["files"] = {{"csv", prefix + ".csv"}};
  return {doc};
}

// -------------------------------------------------------------------- scan

Outcome scan_probability(const Globals& g, const ScanArgs& a, const std::string& prefix) {
  const Grid grid = resolve_grid(g.grid);
  const WaveFunction vac = states::make_vacuum(grid);
  const double step = a.step > 0.0 ? a.step : 0.05;
  Json params;
  std::vector<std::pair<ResourceSpec, int>> resources;  // (resource, label n or -1)
  if (a.cubic) {
    const CubicGateConfig cfg = parse_cubic(*a.cubic);
    params["resource"] = {{"type", "cubic"}, {"gamma", cfg.gamma}, {"s", cfg.s}};
    resources.emplace_back(cfg.resource(), -1);
  } else if (a.fock) {
    const std::vector<int> ns = parse_int_range(*a.fock);
    params["resource"] = {{"type", "fock"}, {"n", ns}};
    for (int n : ns) resources.emplace_back(ResourceSpec::fock(n), n);
  } else {
    throw UsageError("scan probability needs --fock N[..M] or --cubic gamma,ym,s");
  }
  Range window{0.0, 0.0};
  if (a.y) {
    window = parse_range(*a.y);
  } else {
    for (const auto& [res, n] : resources) {
      const auto [lo, hi] = gate::completeness_window(res);
      window.lo = std::min(window.lo, lo);
      window.hi = std::max(window.hi, hi);
    }
  }
  const std::vector<double> ys = sample_range(window, step);
  params["y"] = {{"min", window.lo}, {"max", window.hi}, {"step", step}};

  Json doc = header("scan probability", grid, params);
  CsvWriter csv(prefix + ".csv",
                comments(doc, "outcome probability density P(y_m); n = -1 marks the cubic resource"),
                {"n", "y_m", "P"});
  Json curves = Json::array();
  for (const auto& [res, n] : resources) {
    const auto curve = gate::probability_scan(vac, res, ys);
    std::vector<double> values(curve.size());
    for (std::size_t i = 0; i < curve.size(); ++i) {
      values[i] = curve[i].P;
      csv.row({static_cast<double>(n), curve[i].y_m, curve[i].P});
    }
    const double integral = ys.size() > 1 ? numerics::trapezoid(values, step) : 0.0;
    curves.push_back({{"n", n}, {"integral", json_number(integral)},
                      {"max", json_number(*std::max_element(values.begin(), values.end()))}});
  }
  csv.close();
  doc["results"] = {{"curves", curves}};
  doc["files"] = {{"csv", prefix + ".csv"}};
  return {doc};
}

Outcome scan_fidelity(const Globals& g, const ScanArgs& a, const std::string& prefix,
                      bool coherent) {
  if (!a.fock) throw UsageError("fidelity scans need --fock N");
  const int n = parse_int_range(*a.fock).front();
  const Grid grid = resolve_grid(g.grid);
  const WaveFunction vac = states::make_vacuum(grid);
  const double reach = sqrt_support(n);
  const Range window = a.y ? parse_range(*a.y) : Range{-0.9 * reach, 0.9 * reach};
  if (coherent && std::max(window.lo * window.lo, window.hi * window.hi) >= reach * reach) {
    throw UsageError("F_coh needs y_m^2 < 2n + 1 across the whole --y range");
  }
  const double step = a.step > 0.0 ? a.step : 0.05;
  const std::vector<double> ys = sample_range(window, step);
  const std::string name = coherent ? "scan coh" : "scan cat";
  Json doc = header(name, grid,
                    {{"resource", {{"type", "fock"}, {"n", n}}},
                     {"y", {{"min", window.lo}, {"max", window.hi}, {"step", step}}}});
  struct Row {
    double P;
    double F;
  };
  const auto rows = kernels::parallel::ordered_map(ys.size(), [&](std::size_t i) {
    const CollapseResult r = gate::collapse(vac, ResourceSpec::fock(n), ys[i]);
    const double f = coherent ? analysis::fidelity_coh(r.psi_out, n, ys[i])
                              : analysis::fidelity_cat(r.psi_out, n);
    return Row{r.norm_N, f};
  });
  CsvWriter csv(prefix + ".csv",
                comments(doc, coherent ? "fidelity with the y_m-dependent linearized cat"
                                       : "fidelity with the fixed y_m = 0 cat"),
                {"y_m", "P", "F", "infidelity"});
  for (std::size_t i = 0; i < ys.size(); ++i) {
    csv.row({ys[i], rows[i].P, rows[i].F, 1.0 - rows[i].F});
  }
  csv.close();
  doc["results"] = {{"points", ys.size()}};
  doc["files"] = {{"csv", prefix + ".csv"}};
  return {doc};
}

Outcome scan_mixfid(const Globals& g, const ScanArgs& a, const std::string& prefix) {
  if (!a.fock) throw UsageError("scan mixfid needs --fock N");
  const int n = parse_int_range(*a.fock).front();
  const Grid grid = resolve_grid(g.grid);
  const WaveFunction vac = states::make_vacuum(grid);
  const Range window = a.d ? parse_range(*a.d) : Range{0.0, 2.0};
  if (window.lo < 0.0) throw UsageError("acceptance widths must be non-negative");
  const double step = a.step > 0.0 ? a.step : 0.1;
  const std::vector<double> ds = sample_range(window, step);
  Json doc = header("scan mixfid", grid,
                    {{"resource", {{"type", "fock"}, {"n", n}}},
                     {"d", {{"min", window.lo}, {"max", window.hi}, {"step", step}}},
                     {"nodes", a.nodes}});
  const double f0 =
      analysis::fidelity_cat(gate::collapse(vac, ResourceSpec::fock(n), 0.0).psi_out, n);
  CsvWriter csv(prefix + ".csv",
                comments(doc, "acceptance-window fidelity F_mix and probability P_mix vs width d"),
                {"d", "P_mix", "F_mix", "infidelity"});
  for (double d : ds) {
    MixedFidelity m{f0, 0.0};  // d -> 0 limit
    if (d > 0.0) m = analysis::fidelity_mix(vac, n, AcceptanceWindow{d, a.nodes});
    csv.row({d, m.P_mix, m.F_mix, 1.0 - m.F_mix});
  }
  csv.close();
  doc["results"] = {{"points", ds.size()}, {"F_cat_at_zero", json_number(f0)}};
  doc["files"] = {{"csv", prefix + ".csv"}};
  return {doc};
}

Outcome scan_squeeze(const Globals& g, const ScanArgs& a, const std::string& prefix) {
  if (!a.gamma || !a.ym) throw UsageError("scan squeeze needs --gamma and --ym");
  const Grid grid = resolve_grid(g.grid);
  const WaveFunction vac = states::make_vacuum(grid);
  const Range window = a.s ? parse_range(*a.s) : Range{0.05, 1.0};
  const double step = a.step > 0.0 ? a.step : 0.001;
  const std::vector<double> ss = sample_range(window, step);
  Json doc = header("scan squeeze", grid,
                    {{"gamma", *a.gamma}, {"y_m", *a.ym}, {"reference_n", a.ref_n},
                     {"s", {{"min", window.lo}, {"max", window.hi}, {"step", step}}}});
  const auto points = cubic::squeezing_scan(vac, *a.gamma, *a.ym, ss, a.ref_n);
  CsvWriter csv(prefix + ".csv",
                comments(doc, "cubic gate P and infidelity vs inverse squeezing 1/s"),
                {"s", "inv_s", "dB", "P", "infidelity"});
  for (const SqueezePoint& p : points) csv.row({p.s, p.inverse_s, p.db, p.P, p.infidelity});
  csv.close();
  doc["results"] = {{"points", points.size()}};
  doc["files"] = {{"csv", prefix + ".csv"}};
  return {doc};
}

// ------------------------------------------------------------------- match

Json report_json(const MatchReport& r) {
  return {{"target", r.target == FitTarget::Probability ? "probability" : "infidelity"},
          {"target_value", r.target_value},
          {"fitted", {{"gamma", r.fitted.gamma}, {"y_m", r.fitted.y_m}, {"s", json_number(r.fitted.s)}}},
          {"squeezing_dB", json_number(cubic::squeezing_db(r.fitted.s))},
          {"achieved_P", json_number(r.achieved_P)},
          {"achieved_infidelity", json_number(r.achieved_infidelity)},
          {"iterations", r.iterations},
          {"status", r.converged ? "converged" : "not-converged"}};
}

Outcome match_ladder(const Globals& g, const MatchArgs& a, const std::string& prefix) {
  const Grid grid = resolve_grid(g.grid);
  const WaveFunction vac = states::make_vacuum(grid);
  LadderOptions opt;
  if (a.objective == "linearized") {
    opt.objective = LadderObjective::Linearized;
  } else if (a.objective == "exact") {
    opt.objective = LadderObjective::Exact;
  } else {
    throw UsageError("objective must be 'linearized' or 'exact'");
  }
  opt.s = a.s;
  Json doc = header("match ladder", grid,
                    {{"kmax", a.kmax}, {"objective", a.objective}, {"s", a.s},
                     {"ratio", opt.ratio}, {"y_range", {opt.y_lo, opt.y_hi}}, {"y_step", opt.y_step}});
  const auto entries = matching::table_one_ladder(vac, a.kmax, opt);
  CsvWriter csv(prefix + ".csv",
                comments(doc, "odd-cat ladder of (y_m, gamma) along y_m = 33 gamma"),
                {"k", "y_m", "gamma", "objective", "theta_eff", "exact_infidelity"});
  Json rows = Json::array();
  for (const LadderEntry& e : entries) {
    csv.row({static_cast<double>(e.k), e.y_m, e.gamma, e.objective, e.theta_eff,
             e.exact_infidelity});
    rows.push_back({{"k", e.k}, {"y_m", json_number(e.y_m)}, {"gamma", json_number(e.gamma)},
                    {"objective", json_number(e.objective)},
                    {"theta_eff", json_number(e.theta_eff)},
                    {"exact_infidelity", json_number(e.exact_infidelity)}});
  }
  csv.close();
  doc["results"] = {{"entries", rows}};
  doc["files"] = {{"csv", prefix + ".csv"}};
  return {doc};
}

Outcome match_squeeze(const Globals& g, const MatchArgs& a, const std::string& prefix) {
  if (!a.gamma || !a.ym) throw UsageError("match squeeze needs --gamma and --ym");
  if (a.probability.has_value() == a.infidelity.has_value()) {
    throw UsageError("match squeeze needs exactly one of --probability or --infidelity");
  }
  const Grid grid = resolve_grid(g.grid);
  const WaveFunction vac = states::make_vacuum(grid);
  const FitTarget target = a.probability ? FitTarget::Probability : FitTarget::Infidelity;
  const double value = a.probability ? *a.probability : *a.infidelity;
  FitOptions opt;
  opt.tolerance = a.tol;
  opt.reference_n = a.ref_n;
  Json doc = header("match squeeze", grid,
                    {{"gamma", *a.gamma}, {"y_m", *a.ym},
                     {"target", a.probability ? "probability" : "infidelity"},
                     {"value", value}, {"tolerance", a.tol}, {"reference_n", a.ref_n}});
  const MatchReport r = matching::fit_squeezing(vac, *a.gamma, *a.ym, target, value, opt);
  doc["results"] = report_json(r);
  CsvWriter csv(prefix + ".csv", comments(doc, "fitted ancilla squeezing"),
                {"gamma", "y_m", "s", "dB", "P", "infidelity"});
  csv.row({r.fitted.gamma, r.fitted.y_m, r.fitted.s, cubic::squeezing_db(r.fitted.s),
           r.achieved_P, r.achieved_infidelity});
  csv.close();
  doc["files"] = {{"csv", prefix + ".csv"}};
  return {doc};
}

void write_wigner_csv(const std::string& path, const Json& doc, const WignerGrid& w,
                      const std::string& label) {
  CsvWriter csv(path, comments(doc, "Wigner function of the " + label + " output"),
                {"x", "y", "W"});
  for (std::size_t i = 0; i < w.x_axis.size(); ++i) {
    for (std::size_t k = 0; k < w.y_axis.size(); ++k) csv.row({w.x_axis[i], w.y_axis[k], w.at(i, k)});
  }
  csv.close();
}

Outcome match_compare(const Globals& g, const MatchArgs& a, const std::string& prefix) {
  const Grid grid = resolve_grid(g.grid);
  const WaveFunction vac = states::make_vacuum(grid);
  Json params{{"fock", a.fock}};
  CubicGateConfig cfg;
  if (a.cubic) {
    cfg = parse_cubic(*a.cubic);
  } else if (a.entry) {
    const auto ladder = matching::table_one_ladder(vac, *a.entry);
    const LadderEntry& e = ladder.back();
    cfg.gamma = e.gamma;
    cfg.y_m = e.y_m;
    params["entry"] = *a.entry;
    if (a.fixed_s) {
      cfg.s = *a.fixed_s;
    } else {
      const CollapseResult fock = gate::collapse(vac, ResourceSpec::fock(a.fock), 0.0);
      FitOptions opt;
      opt.reference_n = a.fock;
      FitTarget target = FitTarget::Probability;
      double value = fock.norm_N;
      if (a.match == "infidelity") {
        target = FitTarget::Infidelity;
        value = cubic::infidelity(fock.psi_out, a.fock);
      } else if (a.match != "probability") {
        throw UsageError("--match must be 'probability' or 'infidelity'");
      }
      cfg.s = matching::fit_squeezing(vac, cfg.gamma, cfg.y_m, target, value, opt).fitted.s;
      params["match"] = a.match;
    }
  } else {
    throw UsageError("match compare needs --entry K or --cubic gamma,ym,s");
  }
  params["cubic"] = {{"gamma", json_number(cfg.gamma)}, {"y_m", json_number(cfg.y_m)},
                     {"s", json_number(cfg.s)}};
  std::optional<WignerAxes> axes;
  if (a.wigner) axes = WignerAxes{};
  const GateComparison c = matching::compare_gates(vac, a.fock, cfg, axes);
  Json doc = header("match compare", grid, params);
  auto summary = [](const GateSummary& s) {
    Json j{{"P", json_number(s.P)}, {"infidelity", json_number(s.infidelity)}};
    j["p_plus"] = s.p_plus ? Json(json_number(*s.p_plus)) : Json(nullptr);
    return j;
  };
  doc["results"] = {{"fock", summary(c.fock_gate)},
                    {"cubic", summary(c.cubic_gate)},
                    {"P_ratio", json_number(c.fock_gate.P / c.cubic_gate.P)},
                    {"infidelity_ratio", json_number(c.cubic_gate.infidelity / c.fock_gate.infidelity)}};
  CsvWriter csv(prefix + ".csv",
                comments(doc, "gate comparison; gate 0 = Fock resource, 1 = cubic resource"),
                {"gate", "P", "infidelity", "p_plus"});
  csv.row({0.0, c.fock_gate.P, c.fock_gate.infidelity, c.fock_gate.p_plus.value_or(NAN)});
  csv.row({1.0, c.cubic_gate.P, c.cubic_gate.infidelity, c.cubic_gate.p_plus.value_or(NAN)});
  csv.close();
  doc["files"] = {{"csv", prefix + ".csv"}};
  if (c.fock_wigner && c.cubic_wigner) {
    write_wigner_csv(prefix + "-fock-wigner.csv", doc, *c.fock_wigner, "Fock-resource gate");
    write_wigner_csv(prefix + "-cubic-wigner.csv", doc, *c.cubic_wigner, "cubic-resource gate");
    doc["files"]["fock_wigner"] = prefix + "-fock-wigner.csv";
    doc["files"]["cubic_wigner"] = prefix + "-cubic-wigner.csv";
  }
  return {doc};
}

// ----------------------------------------------------------------- driver

int exit_code(const std::exception_ptr& e, std::ostream& err) {
  try {
    std::rethrow_exception(e);
  } catch (const IoError& x) {
    err << "catgate: I/O error: " << x.what() << '\n';
    return kExitIo;
  } catch (const NotConvergedError& x) {
    err << "catgate: not converged: " << x.what() << '\n';
    return kExitNumerical;
  } catch (const ValueOutOfRangeError& x) {
    err << "catgate: value out of range: " << x.what() << '\n';
    return kExitNumerical;
  } catch (const Error& x) {
    err << "catgate: " << x.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& x) {
    err << "catgate: internal error: " << x.what() << '\n';
    return 1;
  }
}

void add_state_options(CLI::App* sub, StateArgs& a) {
  auto* fock = sub->add_option("--fock", a.fock, "Fock resource photon number")
                   ->check(CLI::Range(0, 64));
  auto* cub = sub->add_option("--cubic", a.cubic, "cubic resource as gamma,ym,s");
  fock->excludes(cub);
  sub->add_option("--ym", a.ym, "homodyne outcome y_m for the Fock resource");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Measurement-assisted cat-state gate: collapse, Wigner, scans and matching",
               "catgate"};
  app.set_version_flag("--version", std::string(kVersion));
  app.set_config("--config", "", "INI file of key = value settings; flags take precedence");
  app.allow_config_extras(CLI::config_extras_mode::error);
  app.require_subcommand(1, 1);

  Globals globals;
  app.add_option("--grid", globals.grid, "coordinate grid as xmin,xmax,n (env CATGATE_GRID)");
  app.add_option("-o,--out", globals.out, "output path prefix for the CSV and JSON files");

  StateArgs collapse_args;
  auto* collapse = app.add_subcommand("collapse", "homodyne-conditioned output of the gate");
  add_state_options(collapse, collapse_args);
  collapse->add_option("--route", collapse_args.route, "cubic factor route: closed|quadrature")
      ->check(CLI::IsMember({"closed", "quadrature"}));
  collapse->add_option("--ref-n", collapse_args.ref_n,
                       "photon number of the reference cat for cubic outputs")
      ->check(CLI::Range(0, 64));

  StateArgs wigner_state;
  WignerArgs wigner_args;
  auto* wigner = app.add_subcommand("wigner", "Wigner function of an input or output state");
  add_state_options(wigner, wigner_state);
  wigner->add_flag("--vacuum", wigner_state.vacuum, "use the vacuum input state itself");
  wigner->add_option("--x", wigner_args.x, "coordinate window a..b");
  wigner->add_option("--y-max", wigner_args.y_max, "momentum half-width");
  wigner->add_option("--stride", wigner_args.stride, "row stride on the coordinate grid")
      ->check(CLI::PositiveNumber);
  wigner->add_option("--padding", wigner_args.padding, "zero-padding factor")
      ->check(CLI::PositiveNumber);

  auto* scan = app.add_subcommand("scan", "curves over outcomes, windows or squeezing");
  scan->require_subcommand(1, 1);
  ScanArgs scan_args;
  auto add_scan = [&](const char* name, const char* help) {
    auto* s = scan->add_subcommand(name, help);
    s->add_option("--step", scan_args.step, "sampling step");
    return s;
  };
  auto* scan_prob = add_scan("probability", "outcome probability density P(y_m)");
  scan_prob->add_option("--fock", scan_args.fock, "photon number or range N..M");
  scan_prob->add_option("--cubic", scan_args.cubic, "cubic resource gamma,ym,s (ym unused)");
  scan_prob->add_option("--y", scan_args.y, "outcome window a..b");
  auto* scan_coh = add_scan("coh", "fidelity with the outcome's own linearized cat");
  auto* scan_cat = add_scan("cat", "fidelity with the y_m = 0 cat");
  for (auto* s : {scan_coh, scan_cat}) {
    s->add_option("--fock", scan_args.fock, "photon number")->required();
    s->add_option("--y", scan_args.y, "outcome window a..b");
  }
  auto* scan_mix = add_scan("mixfid", "acceptance-window fidelity vs width d");
  scan_mix->add_option("--fock", scan_args.fock, "photon number")->required();
  scan_mix->add_option("--d", scan_args.d, "width range a..b");
  scan_mix->add_option("--nodes", scan_args.nodes, "Gauss-Legendre nodes")
      ->check(CLI::Range(8, 4096));
  auto* scan_sq = add_scan("squeeze", "cubic gate P and infidelity vs squeezing");
  scan_sq->add_option("--gamma", scan_args.gamma, "cubic nonlinearity")->required();
  scan_sq->add_option("--ym", scan_args.ym, "homodyne outcome")->required();
  scan_sq->add_option("--s", scan_args.s, "squeezing range a..b");
  scan_sq->add_option("--ref-n", scan_args.ref_n, "reference cat photon number")
      ->check(CLI::Range(0, 64));

  auto* match = app.add_subcommand("match", "cubic-gate parameter matching");
  match->require_subcommand(1, 1);
  MatchArgs match_args;
  auto* ladder = match->add_subcommand("ladder", "odd-cat (y_m, gamma) ladder");
  ladder->add_option("--kmax", match_args.kmax, "number of entries")->check(CLI::Range(1, 9));
  ladder->add_option("--objective", match_args.objective, "linearized|exact")
      ->check(CLI::IsMember({"linearized", "exact"}));
  ladder->add_option("--s", match_args.s, "squeezing for the exact objective and diagnostics");
  auto* msq = match->add_subcommand("squeeze", "fit the ancilla squeezing s to a target");
  msq->add_option("--gamma", match_args.gamma, "cubic nonlinearity")->required();
  msq->add_option("--ym", match_args.ym, "homodyne outcome")->required();
  auto* prob = msq->add_option("--probability", match_args.probability, "target P");
  auto* inf = msq->add_option("--infidelity", match_args.infidelity, "target 1 - F");
  prob->excludes(inf);
  msq->add_option("--tol", match_args.tol, "tolerance in s")->check(CLI::PositiveNumber);
  msq->add_option("--ref-n", match_args.ref_n, "reference cat photon number")
      ->check(CLI::Range(0, 64));
  auto* cmp = match->add_subcommand("compare", "Fock gate at y_m = 0 vs cubic gate");
  cmp->add_option("--fock", match_args.fock, "photon number")->check(CLI::Range(0, 64));
  auto* entry = cmp->add_option("--entry", match_args.entry, "ladder entry k")
                    ->check(CLI::Range(1, 9));
  auto* ccub = cmp->add_option("--cubic", match_args.cubic, "cubic gate gamma,ym,s");
  entry->excludes(ccub);
  cmp->add_option("--s", match_args.fixed_s, "squeezing for --entry (default: fitted)");
  cmp->add_option("--match", match_args.match, "fit s to equal probability|infidelity")
      ->check(CLI::IsMember({"probability", "infidelity"}));
  cmp->add_flag("--wigner", match_args.wigner, "also write both Wigner grids");

  for (auto* sub : {collapse, wigner, scan, match, scan_prob, scan_coh, scan_cat, scan_mix, scan_sq,
                    ladder, msq, cmp}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::string command;
  std::function<Outcome(const std::string&)> body;
  if (collapse->parsed()) {
    command = "collapse";
    body = [&](const std::string& p) { return cmd_collapse(globals, collapse_args, p); };
  } else if (wigner->parsed()) {
    command = "wigner";
    body = [&](const std::string& p) { return cmd_wigner(globals, wigner_state, wigner_args, p); };
  } else if (scan_prob->parsed()) {
    command = "scan-probability";
    body = [&](const std::string& p) { return scan_probability(globals, scan_args, p); };
  } else if (scan_coh->parsed()) {
    command = "scan-coh";
    body = [&](const std::string& p) { return scan_fidelity(globals, scan_args, p, true); };
  } else if (scan_cat->parsed()) {
    command = "scan-cat";
    body = [&](const std::string& p) { return scan_fidelity(globals, scan_args, p, false); };
  } else if (scan_mix->parsed()) {
    command = "scan-mixfid";
    body = [&](const std::string& p) { return scan_mixfid(globals, scan_args, p); };
  } else if (scan_sq->parsed()) {
    command = "scan-squeeze";
    body = [&](const std::string& p) { return scan_squeeze(globals, scan_args, p); };
  } else if (ladder->parsed()) {
    command = "match-ladder";
    body = [&](const std::string& p) { return match_ladder(globals, match_args, p); };
  } else if (msq->parsed()) {
    command = "match-squeeze";
    body = [&](const std::string& p) { return match_squeeze(globals, match_args, p); };
  } else {
    command = "match-compare";
    body = [&](const std::string& p) { return match_compare(globals, match_args, p); };
  }

  try {
    const std::string prefix = globals.out.value_or("catgate-" + command);
    Outcome o = body(prefix);
    o.summary["files"]["json"] = prefix + ".json";
    write_json(prefix + ".json", o.summary);
    out << o.summary.dump(2) << '\n';
    return kExitOk;
  } catch (...) {
    return exit_code(std::current_exception(), err);
  }
}

}  // namespace catgate::cli
