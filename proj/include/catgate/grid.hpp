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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace catgate {

using cplx = std::complex<double>;

/// Uniform coordinate grid x_i = x_min + i * spacing, endpoints included.
class Grid {
 public:
  static constexpr std::size_t kMinPoints = 16;

  Grid(double x_min, double x_max, std::size_t n_points);

  /// Grid on [-half_width, half_width].
  static Grid symmetric(double half_width, std::size_t n_points);

  /// x in [-16, 16] with 4096 points.
  static Grid default_grid();

  double x_min() const noexcept { return x_min_; }
  double x_max() const noexcept { return x_max_; }
  std::size_t size() const noexcept { return n_; }
  double spacing() const noexcept { return h_; }
  double operator[](std::size_t i) const noexcept {
    return x_min_ + static_cast<double>(i) * h_;
  }
  std::vector<double> points() const;

  bool is_symmetric() const noexcept;
  /// True when [lo, hi] lies inside the grid.
  bool covers(double lo, double hi) const noexcept;

  friend bool operator==(const Grid& a, const Grid& b) noexcept {
    return a.x_min_ == b.x_min_ && a.x_max_ == b.x_max_ && a.n_ == b.n_;
  }

 private:
  double x_min_;
  double x_max_;
  std::size_t n_;
  double h_;
};

/// Complex amplitudes sampled on a Grid.
class WaveFunction {
 public:
  WaveFunction(Grid grid, std::vector<cplx> amplitudes);
  explicit WaveFunction(Grid grid);

  const Grid& grid() const noexcept { return grid_; }
  std::size_t size() const noexcept { return amplitudes_.size(); }
  std::span<const cplx> amplitudes() const noexcept { return amplitudes_; }
  std::span<cplx> amplitudes() noexcept { return amplitudes_; }
  const cplx& operator[](std::size_t i) const noexcept { return amplitudes_[i]; }
  cplx& operator[](std::size_t i) noexcept { return amplitudes_[i]; }

  /// Squared norm by the trapezoid rule.
  double norm_squared() const;
  /// Copy scaled to unit norm; throws DomainError for a zero state.
  WaveFunction normalized() const;
  /// Expectation of x^2 for a normalized state.
  double second_moment() const;
  bool all_finite() const noexcept;

  WaveFunction& operator*=(cplx c);
  friend WaveFunction operator*(cplx c, WaveFunction psi) { return psi *= c; }
  /// Pointwise sum; grids must agree.
  friend WaveFunction operator+(const WaveFunction& a, const WaveFunction& b);

 private:
  Grid grid_;
  std::vector<cplx> amplitudes_;
};

}  // namespace catgate
