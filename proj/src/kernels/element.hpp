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

// Per-element bodies shared by the serial and OpenMP kernel drivers.

#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <span>

#include "catgate/kernels.hpp"
#include "numerics/fft.hpp"

namespace catgate::kernels::detail {

inline constexpr double kInvSqrt2Pi = 0.3989422804014326779399460599343819;

inline cplx fourier_sum(double x0, double h, std::span<const cplx> amps, double y) {
  const std::size_t n = amps.size();
  cplx acc{0.0, 0.0};
  for (std::size_t j = 0; j < n; ++j) {
    const double x = x0 + static_cast<double>(j) * h;
    const double w = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
    acc += w * amps[j] * cplx{std::cos(y * x), -std::sin(y * x)};
  }
  return kInvSqrt2Pi * h * acc;
}

inline cplx oscillatory_sum(const OscillatoryPlan& plan, double y) {
  const double s2 = plan.s * plan.s;
  const double amplitude = std::pow(s2 / std::numbers::pi, 0.25);
  cplx acc{0.0, 0.0};
  for (std::size_t j = 0; j < plan.samples; ++j) {
    const double x = -plan.window + static_cast<double>(j) * plan.step;
    const double w = (j == 0 || j + 1 == plan.samples) ? 0.5 : 1.0;
    const double envelope = w * std::exp(-0.5 * s2 * x * x);
    const double phase = x * (plan.gamma * x * x - y);
    acc += envelope * cplx{std::cos(phase), std::sin(phase)};
  }
  return kInvSqrt2Pi * amplitude * plan.step * acc;
}

/// W(x_row, y_k) for every kept bin; `buf` has the layout's FFT length.
/// Returns max |Im W| over the kept bins.
inline double wigner_row(std::span<const cplx> psi, double h, const WignerLayout& layout,
                         std::size_t row_slot, const catgate::detail::FftPlan& plan,
                         catgate::detail::FftBuffer& buf, std::span<double> out) {
  const std::size_t n = psi.size();
  const std::size_t len = layout.fft_length;
  const std::size_t i = layout.rows[row_slot];
  auto data = buf.view();
  std::fill(data.begin(), data.end(), cplx{0.0, 0.0});
  const std::size_t reach = std::min(i, n - 1 - i);
  // g_m = conj(psi(x + z)) psi(x - z), z = m h; the trapezoid end weights
  // sit at |m| = reach.
  for (std::size_t m = 0; m <= reach; ++m) {
    const double w = (m == reach && reach > 0) ? 0.5 : 1.0;
    const cplx g_pos = w * std::conj(psi[i + m]) * psi[i - m];
    if (m == 0) {
      data[0] = g_pos;
    } else {
      data[m] = g_pos;
      data[len - m] = w * std::conj(psi[i - m]) * psi[i + m];
    }
  }
  plan.execute(buf);
  const double scale = h / std::numbers::pi;
  double max_imag = 0.0;
  const std::size_t nb = layout.bins.size();
  for (std::size_t b = 0; b < nb; ++b) {
    const long k = layout.bins[b];
    const auto idx = static_cast<std::size_t>((k % static_cast<long>(len) +
                                               static_cast<long>(len)) %
                                              static_cast<long>(len));
    const cplx v = scale * data[idx];
    out[row_slot * nb + b] = v.real();
    max_imag = std::max(max_imag, std::abs(v.imag()));
  }
  return max_imag;
}

}  // namespace catgate::kernels::detail
