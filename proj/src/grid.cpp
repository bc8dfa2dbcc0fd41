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

#include "catgate/grid.hpp"

#include <cmath>
#include <string>

#include "catgate/errors.hpp"
#include "catgate/numerics.hpp"

namespace catgate {

Grid::Grid(double x_min, double x_max, std::size_t n_points)
    : x_min_(x_min), x_max_(x_max), n_(n_points), h_(0.0) {
  if (n_points < kMinPoints) {
    throw DomainError("grid needs at least " + std::to_string(kMinPoints) +
                      " points, got " + std::to_string(n_points));
  }
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min)) {
    throw DomainError("grid bounds must be finite with x_max > x_min");
  }
  h_ = (x_max - x_min) / static_cast<double>(n_points - 1);
}

Grid Grid::symmetric(double half_width, std::size_t n_points) {
  return Grid(-half_width, half_width, n_points);
}

Grid Grid::default_grid() { return symmetric(16.0, 4096); }

std::vector<double> Grid::points() const {
  std::vector<double> xs(n_);
  for (std::size_t i = 0; i < n_; ++i) xs[i] = (*this)[i];
  return xs;
}

bool Grid::is_symmetric() const noexcept {
  return std::abs(x_min_ + x_max_) <= 1e-12 * std::abs(x_max_);
}

bool Grid::covers(double lo, double hi) const noexcept {
  const double slack = 1e-12 * (std::abs(x_min_) + std::abs(x_max_));
  return x_min_ <= lo + slack && x_max_ >= hi - slack;
}

WaveFunction::WaveFunction(Grid grid, std::vector<cplx> amplitudes)
    : grid_(grid), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != grid_.size()) {
    throw GridMismatchError("amplitude count does not match grid size");
  }
}

WaveFunction::WaveFunction(Grid grid)
    : grid_(grid), amplitudes_(grid.size(), cplx{0.0, 0.0}) {}

double WaveFunction::norm_squared() const {
  std::vector<double> density(amplitudes_.size());
  for (std::size_t i = 0; i < density.size(); ++i) {
    density[i] = std::norm(amplitudes_[i]);
  }
  return numerics::trapezoid(density, grid_.spacing());
}

WaveFunction WaveFunction::normalized() const {
  const double n2 = norm_squared();
  if (!(n2 > 0.0) || !std::isfinite(n2)) {
    throw DomainError("cannot normalize a state with squared norm " +
                      std::to_string(n2));
  }
  WaveFunction out = *this;
  out *= cplx{1.0 / std::sqrt(n2), 0.0};
  return out;
}

double WaveFunction::second_moment() const {
  std::vector<double> f(amplitudes_.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double x = grid_[i];
    f[i] = x * x * std::norm(amplitudes_[i]);
  }
  return numerics::trapezoid(f, grid_.spacing());
}

bool WaveFunction::all_finite() const noexcept {
  for (const cplx& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) return false;
  }
  return true;
}

WaveFunction& WaveFunction::operator*=(cplx c) {
  for (cplx& a : amplitudes_) a *= c;
  return *this;
}

WaveFunction operator+(const WaveFunction& a, const WaveFunction& b) {
  if (!(a.grid() == b.grid())) {
    throw GridMismatchError("cannot add wavefunctions on different grids");
  }
  WaveFunction out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

}  // namespace catgate
