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

#include "catgate/matching.hpp"

#include <cmath>
#include <string>

#include "catgate/errors.hpp"
#include "catgate/kernels.hpp"
#include "catgate/numerics.hpp"
#include "catgate/optimize.hpp"
#include "catgate/semiclassical.hpp"

namespace catgate::matching {

namespace {

constexpr int kMaxLadderEntries = 9;

void check_ladder_options(const LadderOptions& o) {
  if (!(o.y_lo > 0.0) || !(o.y_hi > o.y_lo) || !(o.y_step > 0.0) || !(o.ratio > 0.0)) {
    throw DomainError("ladder search needs 0 < y_lo < y_hi, y_step > 0 and ratio > 0");
  }
  CubicGateConfig{o.y_hi / o.ratio, o.y_hi, o.s}.validate();
}

}  // namespace

double ladder_objective(const WaveFunction& psi_in, double y_m, const LadderOptions& options) {
  const double gamma = y_m / options.ratio;
  const WaveFunction reference = cubic::reference_cat(psi_in.grid());
  if (options.objective == LadderObjective::Linearized) {
    const LinearizedCat lin = semiclassical::cubic_linearize(gamma, y_m);
    return analysis::fidelity(reference, states::make_cat(lin.cat(), psi_in.grid()));
  }
  const CollapseResult r = cubic::cubic_collapse(psi_in, CubicGateConfig{gamma, y_m, options.s});
  return analysis::fidelity(reference, r.psi_out);
}

std::vector<LadderEntry> table_one_ladder(const WaveFunction& psi_in, int k_max,
                                          const LadderOptions& options) {
  if (k_max < 1 || k_max > kMaxLadderEntries) {
    throw DomainError("ladder size must be between 1 and 9, got " + std::to_string(k_max));
  }
  check_ladder_options(options);

  const auto count = static_cast<std::size_t>(
      std::floor((options.y_hi - options.y_lo) / options.y_step + 1e-9)) + 1;
  std::vector<double> ys(count);
  for (std::size_t i = 0; i < count; ++i) {
    ys[i] = options.y_lo + static_cast<double>(i) * options.y_step;
  }
  const std::vector<double> values = kernels::parallel::ordered_map(
      count, [&](std::size_t i) { return ladder_objective(psi_in, ys[i], options); });

  std::vector<std::size_t> seeds;
  for (std::size_t i = 1; i + 1 < count; ++i) {
    if (values[i] > values[i - 1] && values[i] >= values[i + 1]) seeds.push_back(i);
  }
  if (seeds.size() < static_cast<std::size_t>(k_max)) {
    throw NotConvergedError("found " + std::to_string(seeds.size()) +
                            " fidelity maxima on the scan, need " + std::to_string(k_max));
  }
  seeds.resize(static_cast<std::size_t>(k_max));

  const WaveFunction reference = cubic::reference_cat(psi_in.grid());
  return kernels::parallel::ordered_map(seeds.size(), [&](std::size_t j) {
    const std::size_t i = seeds[j];
    const double a = ys[i - 1];
    const double b = ys[i + 1];
    const numerics::SearchResult best = numerics::golden_section_maximize(
        [&](double y) { return ladder_objective(psi_in, y, options); }, a, b,
        options.tolerance);
    const double margin = 4.0 * options.tolerance;
    if (!(best.x > a + margin && best.x < b - margin)) {
      throw NotConvergedError("ladder maximum near y_m=" + std::to_string(ys[i]) +
                              " left its bracket");
    }
    LadderEntry e;
    e.k = static_cast<int>(j) + 1;
    e.y_m = best.x;
    e.gamma = best.x / options.ratio;
    e.objective = best.value;
    e.iterations = best.iterations;
    const CollapseResult r =
        cubic::cubic_collapse(psi_in, CubicGateConfig{e.gamma, e.y_m, options.s});
    e.theta_eff = analysis::effective_cat_phase(r.psi_out, std::sqrt(options.ratio / 3.0),
                                                Parity::Odd);
    e.exact_infidelity = 1.0 - analysis::fidelity(reference, r.psi_out);
    return e;
  });
}

MatchReport recompute(const WaveFunction& psi_in, const MatchReport& report, int reference_n) {
  MatchReport out = report;
  const CollapseResult r = cubic::cubic_collapse(psi_in, report.fitted);
  out.achieved_P = r.norm_N;
  out.achieved_infidelity = cubic::infidelity(r.psi_out, reference_n);
  return out;
}

MatchReport fit_squeezing(const WaveFunction& psi_in, double gamma, double y_m, FitTarget target,
                          double value, const FitOptions& options) {
  if (!(options.s_hi > options.s_lo) || !(options.scan_step > 0.0) || !(options.tolerance > 0.0)) {
    throw DomainError("squeezing fit needs s_lo < s_hi, scan_step > 0 and tolerance > 0");
  }
  CubicGateConfig{gamma, y_m, options.s_lo}.validate();
  CubicGateConfig{gamma, y_m, options.s_hi}.validate();

  const WaveFunction reference = cubic::reference_cat(psi_in.grid(), options.reference_n);
  auto residual = [&](double s) {
    const CollapseResult r = cubic::cubic_collapse(psi_in, CubicGateConfig{gamma, y_m, s});
    const double v = target == FitTarget::Probability
                         ? r.norm_N
                         : 1.0 - analysis::fidelity(reference, r.psi_out);
    return v - value;
  };

  const auto count = static_cast<std::size_t>(
      std::ceil((options.s_hi - options.s_lo) / options.scan_step - 1e-9)) + 1;
  std::vector<double> ss(count);
  for (std::size_t i = 0; i < count; ++i) {
    ss[i] = std::min(options.s_lo + static_cast<double>(i) * options.scan_step, options.s_hi);
  }
  const std::vector<double> rs =
      kernels::parallel::ordered_map(count, [&](std::size_t i) { return residual(ss[i]); });

  for (std::size_t i = 0; i + 1 < count; ++i) {
    if (rs[i] == 0.0 || (rs[i] < 0.0) != (rs[i + 1] < 0.0)) {
      const numerics::SearchResult root =
          numerics::bisect(residual, ss[i], ss[i + 1], options.tolerance, options.max_iterations);
      MatchReport report;
      report.target = target;
      report.target_value = value;
      report.fitted = CubicGateConfig{gamma, y_m, root.x};
      report.iterations = root.iterations;
      report = recompute(psi_in, report, options.reference_n);
      report.converged = true;
      return report;
    }
  }
  throw ValueOutOfRangeError(std::string(target == FitTarget::Probability ? "probability"
                                                                          : "infidelity") +
                             " target " + std::to_string(value) +
                             " is not reached for s in [" + std::to_string(options.s_lo) + ", " +
                             std::to_string(options.s_hi) + "]");
}

GateComparison compare_gates(const WaveFunction& psi_in, int n, const CubicGateConfig& cfg,
                             const std::optional<WignerAxes>& wigner_axes) {
  cfg.validate();
  GateComparison c;
  c.n = n;
  c.cubic = cfg;

  const CollapseResult fock = gate::collapse(psi_in, ResourceSpec::fock(n), 0.0);
  c.fock_gate.P = fock.norm_N;
  c.fock_gate.infidelity = cubic::infidelity(fock.psi_out, n);
  c.fock_gate.p_plus = semiclassical::linearize(n, 0.0).p_plus;

  const CollapseResult cub = cubic::cubic_collapse(psi_in, cfg);
  c.cubic_gate.P = cub.norm_N;
  c.cubic_gate.infidelity = cubic::infidelity(cub.psi_out, n);
  if (cfg.gamma > 0.0 && cfg.y_m > 0.0) {
    c.cubic_gate.p_plus = std::sqrt(cfg.y_m / (3.0 * cfg.gamma));
  }

  if (wigner_axes) {
    c.fock_wigner = analysis::wigner(fock.psi_out, *wigner_axes);
    c.cubic_wigner = analysis::wigner(cub.psi_out, *wigner_axes);
  }
  return c;
}

}  // namespace catgate::matching
