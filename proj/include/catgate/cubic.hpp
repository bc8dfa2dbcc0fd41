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

#include <span>
#include <vector>

#include "catgate/gate.hpp"
#include "catgate/grid.hpp"
#include "catgate/states.hpp"

namespace catgate {

struct CubicGateConfig {
  double gamma = 0.0;
  double y_m = 0.0;
  double s = 1.0;

  /// Throws DomainError when gamma or s is outside its supported range.
  void validate() const;
  ResourceSpec resource() const { return ResourceSpec::cubic_phase(gamma, s); }
};

struct SqueezePoint {
  double s = 0.0;
  double inverse_s = 0.0;
  double db = 0.0;
  double P = 0.0;
  double infidelity = 0.0;
};

namespace cubic {

/// Photon number of the Fock gate whose y_m = 0 cat serves as the target.
inline constexpr int kReferencePhotonNumber = 5;

CollapseResult cubic_collapse(const WaveFunction& psi_in, const CubicGateConfig& cfg,
                              FactorRoute route = FactorRoute::ClosedForm);

/// Odd cat with p_plus = sqrt(11) and theta = 0 (the n = 5, y_m = 0 target).
WaveFunction reference_cat(const Grid& grid, int n = kReferencePhotonNumber);

/// 1 - F against reference_cat(grid, n).
double infidelity(const WaveFunction& psi_out, int n = kReferencePhotonNumber);

/// -20 log10(s).
double squeezing_db(double s);

/// P and 1 - F at each s, in input order.
std::vector<SqueezePoint> squeezing_scan(const WaveFunction& psi_in, double gamma, double y_m,
                                         std::span<const double> s_values,
                                         int n = kReferencePhotonNumber);

}  // namespace cubic
}  // namespace catgate
