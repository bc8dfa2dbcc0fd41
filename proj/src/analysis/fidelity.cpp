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

#include <algorithm>
#include <cmath>

#include "catgate/analysis.hpp"
#include "catgate/errors.hpp"
#include "catgate/gate.hpp"
#include "catgate/kernels.hpp"
#include "catgate/numerics.hpp"
#include "catgate/semiclassical.hpp"

namespace catgate::analysis {

double fidelity(const WaveFunction& a, const WaveFunction& b) {
  const double na = a.norm_squared();
  const double nb = b.norm_squared();
  if (!(na > 0.0) || !(nb > 0.0)) throw DomainError("fidelity of a zero state");
  const double f = std::norm(numerics::overlap(a, b)) / (na * nb);
  return std::clamp(f, 0.0, 1.0);
}

double fidelity_coh(const WaveFunction& psi_out, int n, double y_m) {
  return fidelity(semiclassical::reference_cat(n, y_m, psi_out.grid()), psi_out);
}

double fidelity_cat(const WaveFunction& psi_out, int n) {
  return fidelity(semiclassical::reference_cat(n, 0.0, psi_out.grid()), psi_out);
}

MixedFidelity fidelity_mix(const WaveFunction& psi_in, int n, const AcceptanceWindow& window) {
  if (!(window.d > 0.0)) throw DomainError("acceptance window needs d > 0");
  if (window.n_quadrature < 8) throw DomainError("acceptance window needs at least 8 nodes");
  const numerics::QuadratureRule rule =
      numerics::gauss_legendre(window.n_quadrature, -0.5 * window.d, 0.5 * window.d);
  const ResourceSpec resource = ResourceSpec::fock(n);
  const WaveFunction reference = semiclassical::reference_cat(n, 0.0, psi_in.grid());
  struct Sample {
    double P;
    double F;
  };
  const auto samples = kernels::parallel::ordered_map(rule.nodes.size(), [&](std::size_t i) {
    const CollapseResult r = gate::collapse(psi_in, resource, rule.nodes[i]);
    return Sample{r.norm_N, fidelity(reference, r.psi_out)};
  });
  MixedFidelity m;
  double weighted = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    m.P_mix += rule.weights[i] * samples[i].P;
    weighted += rule.weights[i] * samples[i].P * samples[i].F;
  }
  if (!(m.P_mix > 0.0)) throw ZeroProbabilityError("acceptance window has zero probability");
  m.F_mix = weighted / m.P_mix;
  return m;
}

double effective_cat_phase(const WaveFunction& psi, double p_plus, Parity parity) {
  if (!(p_plus > 0.0)) throw DomainError("effective cat phase needs p_plus > 0");
  const Grid& grid = psi.grid();
  WaveFunction c(grid);
  WaveFunction s(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    const double g = std::exp(-0.5 * x * x);
    c[i] = std::cos(p_plus * x) * g;
    s[i] = std::sin(p_plus * x) * g;
  }
  // psi ~ A (sin th c + cos th s) for odd parity, A (cos th c - sin th s) for even.
  const cplx u = numerics::overlap(c, psi) / c.norm_squared();
  const cplx v = numerics::overlap(s, psi) / s.norm_squared();
  double theta = 0.0;
  if (parity == Parity::Odd) {
    theta = std::atan2(std::real(u * std::conj(v)), std::norm(v));
  } else {
    theta = std::atan2(-std::real(v * std::conj(u)), std::norm(u));
  }
  return semiclassical::wrap_half_turn(theta);
}

}  // namespace catgate::analysis
