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

#include "catgate/cubic.hpp"

#include <cmath>

#include "catgate/analysis.hpp"
#include "catgate/errors.hpp"
#include "catgate/kernels.hpp"
#include "catgate/numerics.hpp"
#include "catgate/semiclassical.hpp"

namespace catgate {

void CubicGateConfig::validate() const {
  numerics::check_cubic_parameters(gamma, s);
  if (!std::isfinite(y_m)) throw DomainError("cubic gate outcome y_m must be finite");
}

namespace cubic {

CollapseResult cubic_collapse(const WaveFunction& psi_in, const CubicGateConfig& cfg,
                              FactorRoute route) {
  cfg.validate();
  return gate::collapse(psi_in, cfg.resource(), cfg.y_m, route);
}

WaveFunction reference_cat(const Grid& grid, int n) {
  return semiclassical::reference_cat(n, 0.0, grid);
}

double infidelity(const WaveFunction& psi_out, int n) {
  return 1.0 - analysis::fidelity(reference_cat(psi_out.grid(), n), psi_out);
}

double squeezing_db(double s) {
  if (!(s > 0.0)) throw DomainError("squeezing factor must be positive");
  return -20.0 * std::log10(s);
}

std::vector<SqueezePoint> squeezing_scan(const WaveFunction& psi_in, double gamma, double y_m,
                                         std::span<const double> s_values, int n) {
  for (double s : s_values) CubicGateConfig{gamma, y_m, s}.validate();
  const WaveFunction reference = reference_cat(psi_in.grid(), n);
  return kernels::parallel::ordered_map(s_values.size(), [&](std::size_t i) {
    const double s = s_values[i];
    const CollapseResult r = cubic_collapse(psi_in, CubicGateConfig{gamma, y_m, s});
    return SqueezePoint{s, 1.0 / s, squeezing_db(s), r.norm_N,
                        1.0 - analysis::fidelity(reference, r.psi_out)};
  });
}

}  // namespace cubic
}  // namespace catgate
