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

#include "catgate/states.hpp"

#include <cmath>
#include <cstdio>

#include "catgate/errors.hpp"
#include "catgate/numerics.hpp"

namespace catgate {

using numerics::kPi;

const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

ResourceSpec ResourceSpec::fock(int n) {
  if (n < 0 || n > numerics::kMaxFockNumber) {
    throw DomainError("Fock photon number " + std::to_string(n) + " outside [0, 64]");
  }
  return ResourceSpec(Fock{n});
}

ResourceSpec ResourceSpec::cubic_phase(double gamma, double s) {
  numerics::check_cubic_parameters(gamma, s);
  return ResourceSpec(CubicPhase{gamma, s});
}

std::string ResourceSpec::describe() const {
  char buf[96];
  if (is_fock()) {
    std::snprintf(buf, sizeof buf, "fock(n=%d)", as_fock().n);
  } else {
    std::snprintf(buf, sizeof buf, "cubic(gamma=%.12g, s=%.12g)", as_cubic().gamma,
                  as_cubic().s);
  }
  return buf;
}

namespace states {

namespace {

void require_cover(const Grid& grid, double half_width, const char* what) {
  if (!grid.covers(-half_width, half_width)) {
    throw GridTooSmallError(std::string(what) + " needs a grid covering [-" +
                            std::to_string(half_width) + ", " +
                            std::to_string(half_width) + "]");
  }
}

}  // namespace

WaveFunction make_vacuum(const Grid& grid) {
  require_cover(grid, 6.0, "vacuum");
  WaveFunction psi(grid);
  const double a = std::pow(kPi, -0.25);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    psi[i] = a * std::exp(-0.5 * grid[i] * grid[i]);
  }
  return psi;
}

WaveFunction make_fock(int n, const Grid& grid) { return numerics::hermite_function(n, grid); }

WaveFunction make_coherent(cplx alpha, const Grid& grid) {
  const double q0 = std::sqrt(2.0) * alpha.real();
  const double p0 = std::sqrt(2.0) * alpha.imag();
  const double reach = std::abs(q0) + 6.0;
  if (!grid.covers(-reach, reach)) {
    throw GridTooSmallError("coherent state needs a grid covering +-" + std::to_string(reach));
  }
  WaveFunction psi(grid);
  const double a = std::pow(kPi, -0.25);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    const double dx = x - q0;
    psi[i] = a * std::exp(-0.5 * dx * dx) * std::polar(1.0, p0 * x - 0.5 * q0 * p0);
  }
  return psi;
}

WaveFunction make_cubic_phase(double gamma, double s, const Grid& grid) {
  numerics::check_cubic_parameters(gamma, s);
  require_cover(grid, 6.0 / s, "cubic phase state");
  WaveFunction psi(grid);
  const double s2 = s * s;
  const double a = std::pow(s2 / kPi, 0.25);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    psi[i] = a * std::exp(-0.5 * s2 * x * x) * std::polar(1.0, gamma * x * x * x);
  }
  return psi;
}

WaveFunction make_cat(const CatParams& params, const Grid& grid) {
  if (!(params.p_plus >= 0.0) || !std::isfinite(params.theta)) {
    throw DomainError("cat state needs p_plus >= 0 and a finite theta");
  }
  require_cover(grid, 6.0, "cat state");
  const bool even = params.parity == Parity::Even;
  const double overlap_term =
      std::cos(2.0 * params.theta) * std::exp(-params.p_plus * params.p_plus);
  const double denom = even ? 1.0 + overlap_term : 1.0 - overlap_term;
  if (!(denom > 0.0)) {
    // sin(theta + p x) vanishes identically (odd parity, p = 0, theta = 0).
    throw DomainError("cat state with these parameters is the zero vector");
  }
  const double a = std::sqrt(2.0) * std::pow(kPi, -0.25) / std::sqrt(denom);
  const cplx global = even ? cplx{1.0, 0.0} : cplx{0.0, 1.0};
  WaveFunction psi(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double x = grid[i];
    const double arg = params.theta + params.p_plus * x;
    const double shape = even ? std::cos(arg) : std::sin(arg);
    psi[i] = global * a * shape * std::exp(-0.5 * x * x);
  }
  return psi;
}

}  // namespace states
}  // namespace catgate
