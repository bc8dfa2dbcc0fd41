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

#include <cmath>
#include <cstdint>
#include <string>

#include "catgate/errors.hpp"
#include "catgate/numerics.hpp"
#include "numerics/fft.hpp"

namespace catgate::numerics {

namespace {

// exp(i pi m / d) for integer m, reduced exactly before the trig call.
cplx unit_phase(std::int64_t m, std::int64_t d) {
  const std::int64_t period = 2 * d;
  std::int64_t r = m % period;
  if (r < 0) r += period;
  const double angle = kPi * static_cast<double>(r) / static_cast<double>(d);
  return {std::cos(angle), std::sin(angle)};
}

}  // namespace

Grid conjugate_grid(const Grid& grid) {
  const double n = static_cast<double>(grid.size());
  const double dk = 2.0 * kPi / (n * grid.spacing());
  return Grid::symmetric(0.5 * (n - 1.0) * dk, grid.size());
}

WaveFunction fourier_transform(const WaveFunction& psi, FourierOptions options) {
  const Grid& grid = psi.grid();
  if (!grid.is_symmetric()) {
    throw DomainError("fourier_transform needs a grid symmetric about 0");
  }
  const double nyquist = kPi / grid.spacing();
  if (options.max_wavenumber > 0.0 && options.max_wavenumber >= nyquist) {
    throw NyquistError("declared wavenumber " + std::to_string(options.max_wavenumber) +
                       " exceeds the grid Nyquist limit " + std::to_string(nyquist));
  }

  // With x_j = (j - c) h and y_k = (k - c) dk, c = (N-1)/2:
  //   exp(-i y_k x_j) = exp(-2 pi i j k / N) exp(i pi (N-1) j / N)
  //                     * exp(i pi (2k - N + 1)(N - 1) / (2N)).
  const std::size_t n = grid.size();
  const auto nn = static_cast<std::int64_t>(n);
  detail::FftBuffer buf(n);
  auto data = buf.view();
  for (std::size_t j = 0; j < n; ++j) {
    const double w = (j == 0 || j + 1 == n) ? 0.5 : 1.0;
    const auto jj = static_cast<std::int64_t>(j);
    data[j] = w * psi[j] * unit_phase((nn - 1) * jj, nn);
  }
  detail::FftPlan plan(n, detail::FftPlan::Direction::Forward);
  plan.execute(buf);

  const double scale = grid.spacing() / std::sqrt(2.0 * kPi);
  WaveFunction out(conjugate_grid(grid));
  for (std::size_t k = 0; k < n; ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    out[k] = scale * data[k] * unit_phase((2 * kk - nn + 1) * (nn - 1), 2 * nn);
  }
  return out;
}

std::vector<cplx> fourier_at(const WaveFunction& psi, std::span<const double> ys) {
  std::vector<cplx> out(ys.size());
  kernels::parallel::fourier_sums(psi.grid().x_min(), psi.grid().spacing(),
                                  psi.amplitudes(), ys, out);
  return out;
}

cplx overlap(const WaveFunction& a, const WaveFunction& b) {
  if (!(a.grid() == b.grid())) {
    throw GridMismatchError("overlap needs identical grids");
  }
  std::vector<cplx> f(a.size());
  for (std::size_t i = 0; i < f.size(); ++i) f[i] = std::conj(a[i]) * b[i];
  return trapezoid(f, a.grid().spacing());
}

}  // namespace catgate::numerics
