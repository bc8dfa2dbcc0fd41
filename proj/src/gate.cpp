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

#include "catgate/gate.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "catgate/errors.hpp"
#include "catgate/kernels.hpp"
#include "catgate/numerics.hpp"

namespace catgate::gate {

namespace {

constexpr double kZeroNorm = 1e-300;
constexpr double kSupportCutoff = 1e-16;

cplx minus_i_power(int n) {
  switch (n % 4) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, -1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, 1.0};
  }
}

std::vector<bool> support_mask(const WaveFunction& psi) {
  double peak = 0.0;
  for (const cplx& a : psi.amplitudes()) peak = std::max(peak, std::abs(a));
  std::vector<bool> mask(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    mask[i] = std::abs(psi[i]) >= kSupportCutoff * peak;
  }
  return mask;
}

CollapseResult finish(const WaveFunction& psi_in, const std::vector<cplx>& factor,
                      const ResourceSpec& resource, double y_m) {
  WaveFunction out(psi_in.grid());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = psi_in[i] * factor[i];
  const double norm = out.norm_squared();
  if (!(norm >= kZeroNorm)) {
    throw ZeroProbabilityError("outcome y_m=" + std::to_string(y_m) + " has probability " +
                               std::to_string(norm) + " for " + resource.describe());
  }
  out *= cplx{1.0 / std::sqrt(norm), 0.0};
  return CollapseResult{std::move(out), norm, y_m, resource};
}

}  // namespace

std::vector<cplx> resource_factor(const WaveFunction& support, const ResourceSpec& resource,
                                  double y_m, FactorRoute route) {
  const Grid& grid = support.grid();
  std::vector<cplx> factor(grid.size(), cplx{0.0, 0.0});
  if (resource.is_fock()) {
    const int n = resource.as_fock().n;
    const cplx phase = minus_i_power(n);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      factor[i] = phase * numerics::hermite_function_value(n, y_m - grid[i]);
    }
    return factor;
  }

  const auto [gamma, s] = resource.as_cubic();
  const std::vector<bool> mask = support_mask(support);
  if (route == FactorRoute::ClosedForm) {
    for (std::size_t i = 0; i < grid.size(); ++i) {
      if (mask[i]) {
        factor[i] = numerics::cubic_fourier_factor_closed_form(gamma, s, y_m - grid[i]);
      }
    }
    return factor;
  }
  std::vector<double> ys;
  std::vector<std::size_t> where;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (mask[i]) {
      ys.push_back(y_m - grid[i]);
      where.push_back(i);
    }
  }
  const std::vector<cplx> values = numerics::oscillatory_fourier_factor(gamma, s, ys);
  for (std::size_t k = 0; k < where.size(); ++k) factor[where[k]] = values[k];
  return factor;
}

CollapseResult collapse(const WaveFunction& psi_in, const ResourceSpec& resource, double y_m,
                        FactorRoute route) {
  return finish(psi_in, resource_factor(psi_in, resource, y_m, route), resource, y_m);
}

CollapseResult collapse_via_transform(const WaveFunction& psi_in, int n, double y_m) {
  const Grid& grid = psi_in.grid();
  const WaveFunction fock = numerics::hermite_function(n, grid);
  std::vector<double> ys(grid.size());
  for (std::size_t i = 0; i < ys.size(); ++i) ys[i] = y_m - grid[i];
  return finish(psi_in, numerics::fourier_at(fock, ys), ResourceSpec::fock(n), y_m);
}

double probability_density(const WaveFunction& psi_in, const ResourceSpec& resource,
                           double y_m, FactorRoute route) {
  const std::vector<cplx> factor = resource_factor(psi_in, resource, y_m, route);
  std::vector<double> integrand(psi_in.size());
  for (std::size_t i = 0; i < integrand.size(); ++i) {
    integrand[i] = std::norm(psi_in[i]) * std::norm(factor[i]);
  }
  return numerics::trapezoid(integrand, psi_in.grid().spacing());
}

std::vector<ProbabilityPoint> probability_scan(const WaveFunction& psi_in,
                                               const ResourceSpec& resource,
                                               std::span<const double> y_grid,
                                               FactorRoute route) {
  for (std::size_t i = 0; i < y_grid.size(); ++i) {
    if (!std::isfinite(y_grid[i]) || (i > 0 && y_grid[i] < y_grid[i - 1])) {
      throw DomainError("probability_scan needs finite, ordered outcomes");
    }
  }
  return kernels::parallel::ordered_map(y_grid.size(), [&](std::size_t i) {
    return ProbabilityPoint{y_grid[i], probability_density(psi_in, resource, y_grid[i], route)};
  });
}

std::pair<double, double> completeness_window(const ResourceSpec& resource) {
  if (resource.is_fock()) {
    const double r = std::sqrt(2.0 * resource.as_fock().n + 1.0);
    return {-12.0 - r, 12.0 + r};
  }
  // y = p2 + 3 gamma q2^2 + q1 with q2 of standard deviation 1/(s sqrt 2).
  const auto [gamma, s] = resource.as_cubic();
  const double q_reach = 6.0 / (s * std::sqrt(2.0));
  return {-12.0, 12.0 + 3.0 * gamma * q_reach * q_reach};
}

double integrated_probability(const WaveFunction& psi_in, const ResourceSpec& resource,
                              double lo, double hi, std::size_t points) {
  if (points < 2 || !(hi > lo)) {
    throw DomainError("integrated_probability needs hi > lo and at least 2 points");
  }
  const double step = (hi - lo) / static_cast<double>(points - 1);
  std::vector<double> ys(points);
  for (std::size_t i = 0; i < points; ++i) ys[i] = lo + static_cast<double>(i) * step;
  const auto curve = probability_scan(psi_in, resource, ys);
  std::vector<double> values(points);
  for (std::size_t i = 0; i < points; ++i) values[i] = curve[i].P;
  return numerics::trapezoid(values, step);
}

}  // namespace catgate::gate
