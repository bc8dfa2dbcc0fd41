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

#include <vector>

#include "catgate/grid.hpp"
#include "catgate/states.hpp"

namespace catgate {

struct PhasePoint {
  double q = 0.0;
  double p = 0.0;
};

/// Output quadratures of the target. Zero, one (degenerate) or two branches.
struct MappingResult {
  std::vector<PhasePoint> branches;
  bool degenerate = false;
};

struct LinearizedCat {
  double theta = 0.0;
  double p_plus = 0.0;
  Parity parity = Parity::Even;

  CatParams cat() const { return CatParams{p_plus, theta, parity}; }
};

/// Added factor sampled on a grid; `valid[i]` is false inside the excluded
/// caustic zone |z| >= 1 - eps, where `values[i]` is left at zero.
struct AddedFactor {
  std::vector<cplx> values;
  std::vector<bool> valid;
};

namespace semiclassical {

inline constexpr double kCausticExclusion = 1e-3;

/// p_out = p_in +- sqrt(2n + 1 - (y_m - q_in)^2), q_out = q_in.
MappingResult fock_mapping(int n, double y_m, PhasePoint in);

/// p_out = p_in +- sqrt((y_m - q_in - p2_in) / (3 gamma)), q_out = q_in.
MappingResult cubic_mapping(double gamma, double y_m, PhasePoint in, double p2_in);

/// delta p(x) = sqrt(2n + 1 - (y_m - x)^2); DomainError outside the support.
double delta_p(int n, double y_m, double x);

/// phi(n, z) = (2n + 1)/2 (z sqrt(1 - z^2) + arcsin z), |z| <= 1.
double phase(int n, double z);

/// (1 - z^2)^(-1/4) [e^{i phi} + (-1)^n e^{-i phi}], z = (x - y_m)/sqrt(2n + 1).
AddedFactor added_factor(int n, double y_m, const Grid& grid,
                         double eps = kCausticExclusion);

/// psi_in times the added factor, normalized, with the global phase chosen so
/// that the overlap with the exact collapsed output is real and positive.
WaveFunction semiclassical_output(const WaveFunction& psi_in, int n, double y_m);

/// theta = phi(n, -y_m/sqrt(2n + 1)), p_plus = sqrt(2n + 1 - y_m^2).
LinearizedCat linearize(int n, double y_m);

WaveFunction reference_cat(int n, double y_m, const Grid& grid);

/// Linearized cubic-gate output for a sharply squeezed ancilla:
/// p_plus = sqrt(y_m / (3 gamma)), theta = -(2/3) y_m^(3/2) / sqrt(3 gamma) - pi/4
/// reduced to (-pi/2, pi/2], odd parity.
LinearizedCat cubic_linearize(double gamma, double y_m);

/// Reduces an angle to (-pi/2, pi/2]; cat states at theta and theta + pi
/// differ only by a global sign.
double wrap_half_turn(double theta);

}  // namespace semiclassical
}  // namespace catgate
