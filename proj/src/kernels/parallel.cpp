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

#include <omp.h>

#include <algorithm>

#include "catgate/kernels.hpp"
#include "kernels/element.hpp"

namespace catgate::kernels::parallel {

void fourier_sums(double x0, double h, std::span<const cplx> amps,
                  std::span<const double> ys, std::span<cplx> out) {
  const long n = static_cast<long>(ys.size());
#pragma omp parallel for schedule(static)
  for (long k = 0; k < n; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    out[kk] = detail::fourier_sum(x0, h, amps, ys[kk]);
  }
}

void oscillatory_sums(const OscillatoryPlan& plan, std::span<const double> ys,
                      std::span<cplx> out) {
  const long n = static_cast<long>(ys.size());
#pragma omp parallel for schedule(dynamic)
  for (long k = 0; k < n; ++k) {
    const auto kk = static_cast<std::size_t>(k);
    out[kk] = detail::oscillatory_sum(plan, ys[kk]);
  }
}

double wigner_rows(std::span<const cplx> psi, double h, const WignerLayout& layout,
                   std::span<double> out) {
  const catgate::detail::FftPlan plan(layout.fft_length,
                                      catgate::detail::FftPlan::Direction::Backward);
  const long rows = static_cast<long>(layout.rows.size());
  double max_imag = 0.0;
#pragma omp parallel reduction(max : max_imag)
  {
    catgate::detail::FftBuffer buf(layout.fft_length);
#pragma omp for schedule(static)
    for (long r = 0; r < rows; ++r) {
      max_imag = std::max(max_imag, detail::wigner_row(psi, h, layout,
                                                       static_cast<std::size_t>(r),
                                                       plan, buf, out));
    }
  }
  return max_imag;
}

}  // namespace catgate::kernels::parallel
