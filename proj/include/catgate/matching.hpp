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

#pragma once

#include <optional>
#include <vector>

#include "catgate/analysis.hpp"
#include "catgate/cubic.hpp"
#include "catgate/grid.hpp"

namespace catgate {

enum class LadderObjective {
  /// Fidelity of the linearized cubic output (sharp-squeezing limit) with
  /// the odd reference cat.
  Linearized,
  /// Fidelity of the exact collapsed output at the given s.
  Exact,
};

struct LadderOptions {
  LadderObjective objective = LadderObjective::Linearized;
  double y_lo = 0.5;
  double y_hi = 13.0;
  double y_step = 0.05;
  double ratio = 33.0;  // y_m = ratio * gamma
  double s = 0.05;      // squeezing for the exact objective and diagnostics
  double tolerance = 1e-9;
};

struct LadderEntry {
  int k = 0;
  double y_m = 0.0;
  double gamma = 0.0;
  double objective = 0.0;  // fidelity at the refined maximum
  int iterations = 0;
  /// Best-matching odd-cat phase of the exact output at options.s.
  double theta_eff = 0.0;
  /// 1 - F of the exact output at options.s against the reference cat.
  double exact_infidelity = 0.0;
};

enum class FitTarget { Probability, Infidelity };

struct FitOptions {
  double s_lo = 0.05;
  double s_hi = 1.0;
  double scan_step = 0.005;
  double tolerance = 1e-3;
  int max_iterations = 200;
  int reference_n = cubic::kReferencePhotonNumber;
};

struct MatchReport {
  FitTarget target = FitTarget::Probability;
  double target_value = 0.0;
  CubicGateConfig fitted;
  double achieved_P = 0.0;
  double achieved_infidelity = 0.0;
  int iterations = 0;
  bool converged = false;
};

struct GateSummary {
  double P = 0.0;
  double infidelity = 0.0;
  std::optional<double> p_plus;  // semiclassical half-spacing of the copies
};

struct GateComparison {
  int n = 0;
  CubicGateConfig cubic;
  GateSummary fock_gate;
  GateSummary cubic_gate;
  std::optional<WignerGrid> fock_wigner;
  std::optional<WignerGrid> cubic_wigner;
};

namespace matching {

/// The first k_max (y_m, gamma) points along y_m = ratio * gamma where the
/// chosen fidelity objective has a local maximum, in increasing y_m.
std::vector<LadderEntry> table_one_ladder(const WaveFunction& psi_in, int k_max,
                                          const LadderOptions& options = {});

/// Objective value at one point of the constraint line.
double ladder_objective(const WaveFunction& psi_in, double y_m, const LadderOptions& options);

/// Smallest s in [s_lo, s_hi] where the chosen curve crosses `value`,
/// refined by bisection.
MatchReport fit_squeezing(const WaveFunction& psi_in, double gamma, double y_m, FitTarget target,
                          double value, const FitOptions& options = {});

/// P and 1 - F recomputed from scratch for report.fitted.
MatchReport recompute(const WaveFunction& psi_in, const MatchReport& report,
                      int reference_n = cubic::kReferencePhotonNumber);

/// Fock gate at (n, y_m = 0) next to the cubic gate at cfg; both infidelities
/// are taken against the y_m = 0 cat of photon number n.
GateComparison compare_gates(const WaveFunction& psi_in, int n, const CubicGateConfig& cfg,
                             const std::optional<WignerAxes>& wigner_axes = std::nullopt);

}  // namespace matching
}  // namespace catgate
