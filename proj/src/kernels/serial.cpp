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

#include "catgate/kernels.hpp"
#include "kernels/element.hpp"

namespace catgate::kernels::serial {

void fourier_sums(double x0, double h, std::span<const cplx> amps,
                  std::span<const double> ys, std::span<cplx> out) {
  for (std::size_t k = 0; k < ys.size(); ++k) {
    out[k] = detail::fourier_sum(x0, h, amps, ys[k]);
  }
}

void oscillatory_sums(const OscillatoryPlan& plan, std::span<const double> ys,
                      std::span<cplx> out) {
  for (std::size_t k = 0; k < ys.size(); ++k) {
    out[k] = detail::oscillatory_sum(plan, ys[k]);
  }
}

double wigner_rows(std::span<const cplx> psi, double h, const WignerLayout& layout,
                   std::span<double> out) {
  const catgate::detail::FftPlan plan(layout.fft_length,
                                      catgate::detail::FftPlan::Direction::Backward);
  catgate::detail::FftBuffer buf(layout.fft_length);
  double max_imag = 0.0;
  for (std::size_t r = 0; r < layout.rows.size(); ++r) {
    max_imag = std::max(max_imag, detail::wigner_row(psi, h, layout, r, plan, buf, out));
  }
  return max_imag;
}

}  // namespace catgate::kernels::serial
