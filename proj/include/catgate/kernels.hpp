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

// Data-parallel inner loops. Every kernel exists twice: `parallel::` is the
// OpenMP version used by the library, `serial::` is the plain reference the
// tests and the benchmark compare it against. Both produce results in input
// order.

#pragma once

#include <cstddef>
#include <exception>
#include <optional>
#include <span>
#include <type_traits>
#include <vector>

#include "catgate/grid.hpp"

namespace catgate::kernels {

/// Trapezoid quadrature of the cubic-phase Fourier integral.
struct OscillatoryPlan {
  double gamma = 0.0;
  double s = 1.0;
  double window = 0.0;  // integrate over [-window, window]
  double step = 0.0;
  std::size_t samples = 0;
};

/// Geometry of one Wigner evaluation: the rows (indices into psi) and the
/// FFT bins (signed, y_k = pi k / (fft_length h)) to keep.
struct WignerLayout {
  std::vector<std::size_t> rows;
  std::vector<long> bins;
  std::size_t fft_length = 0;
};

namespace serial {

/// out[k] = (2 pi)^(-1/2) h sum_j w_j exp(-i ys[k] x_j) amps[j], x_j = x0 + j h,
/// trapezoid weights w_j.
void fourier_sums(double x0, double h, std::span<const cplx> amps,
                  std::span<const double> ys, std::span<cplx> out);

void oscillatory_sums(const OscillatoryPlan& plan, std::span<const double> ys,
                      std::span<cplx> out);

/// Row-major W[row][bin]; returns the largest |Im W| seen before truncation.
double wigner_rows(std::span<const cplx> psi, double h, const WignerLayout& layout,
                   std::span<double> out);

template <class Fn>
auto ordered_map(std::size_t n, Fn&& fn) {
  using R = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<R> results;
  results.reserve(n);
  for (std::size_t i = 0; i < n; ++i) results.push_back(fn(i));
  return results;
}

}  // namespace serial

namespace parallel {

void fourier_sums(double x0, double h, std::span<const cplx> amps,
                  std::span<const double> ys, std::span<cplx> out);

void oscillatory_sums(const OscillatoryPlan& plan, std::span<const double> ys,
                      std::span<cplx> out);

double wigner_rows(std::span<const cplx> psi, double h, const WignerLayout& layout,
                   std::span<double> out);

/// fn(i) for i in [0, n) on OpenMP threads; results stay in index order and
/// the first exception thrown by any iteration is rethrown.
template <class Fn>
auto ordered_map(std::size_t n, Fn&& fn) {
  using R = std::invoke_result_t<Fn&, std::size_t>;
  std::vector<std::optional<R>> slots(n);
  std::exception_ptr error;
  const long count = static_cast<long>(n);
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      slots[static_cast<std::size_t>(i)].emplace(fn(static_cast<std::size_t>(i)));
    } catch (...) {
#pragma omp critical(catgate_ordered_map_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  std::vector<R> results;
  results.reserve(n);
  for (auto& slot : slots) results.push_back(std::move(*slot));
  return results;
}

}  // namespace parallel

}  // namespace catgate::kernels
