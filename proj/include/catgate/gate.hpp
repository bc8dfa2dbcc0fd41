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
#include <utility>
#include <vector>

#include "catgate/grid.hpp"
#include "catgate/states.hpp"

namespace catgate {

/// How the cubic resource's momentum-space factor is evaluated.
enum class FactorRoute {
  ClosedForm,  // Airy closed form of the Gaussian-damped cubic integral
  Quadrature,  // direct oscillatory quadrature over [-8/s, 8/s]
};

struct CollapseResult {
  WaveFunction psi_out;
  double norm_N = 0.0;
  double y_m = 0.0;
  ResourceSpec resource;
};

struct ProbabilityPoint {
  double y_m = 0.0;
  double P = 0.0;
};

namespace gate {

/// [F psi_res](y_m - x) at every grid point. Cubic factors are skipped (left
/// zero) where |psi_in| is negligible, so pass the input state as `support`.
std::vector<cplx> resource_factor(const WaveFunction& support, const ResourceSpec& resource,
                                  double y_m, FactorRoute route = FactorRoute::ClosedForm);

/// Homodyne-conditioned output psi_in(x) [F psi_res](y_m - x), normalized.
CollapseResult collapse(const WaveFunction& psi_in, const ResourceSpec& resource, double y_m,
                        FactorRoute route = FactorRoute::ClosedForm);

/// Same as collapse, but the Fock factor comes from a numerical Fourier
/// transform of the Hermite function instead of (-i)^n psi^(n).
CollapseResult collapse_via_transform(const WaveFunction& psi_in, int n, double y_m);

/// Outcome density P(y_m) = int |psi_in(x)|^2 |[F psi_res](y_m - x)|^2 dx.
double probability_density(const WaveFunction& psi_in, const ResourceSpec& resource,
                           double y_m, FactorRoute route = FactorRoute::ClosedForm);

/// P at each outcome, in input order.
std::vector<ProbabilityPoint> probability_scan(const WaveFunction& psi_in,
                                               const ResourceSpec& resource,
                                               std::span<const double> y_grid,
                                               FactorRoute route = FactorRoute::ClosedForm);

/// Outcome window that holds essentially all of P for a vacuum input.
std::pair<double, double> completeness_window(const ResourceSpec& resource);

/// Trapezoid integral of P over [lo, hi] with `points` samples.
double integrated_probability(const WaveFunction& psi_in, const ResourceSpec& resource,
                              double lo, double hi, std::size_t points);

}  // namespace gate
}  // namespace catgate
