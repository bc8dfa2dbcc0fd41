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
#include <limits>

#include "catgate/analysis.hpp"
#include "catgate/errors.hpp"
#include "catgate/kernels.hpp"
#include "catgate/numerics.hpp"

namespace catgate::analysis {

using numerics::kPi;

namespace {

struct Layout {
  kernels::WignerLayout kernel;
  Grid x_axis;
  Grid y_axis;
};

Layout make_layout(const Grid& grid, const WignerAxes& axes) {
  if (axes.x_stride == 0 || axes.padding == 0 || !(axes.y_max > 0.0)) {
    throw DomainError("Wigner axes need x_stride >= 1, padding >= 1 and y_max > 0");
  }
  if (!(axes.x_max > axes.x_min) || !grid.covers(axes.x_min, axes.x_max)) {
    throw DomainError("Wigner x-axis lies outside the wavefunction grid");
  }
  const double h = grid.spacing();
  const auto first = static_cast<std::size_t>(std::ceil((axes.x_min - grid.x_min()) / h - 1e-9));
  const auto last = static_cast<std::size_t>(std::floor((axes.x_max - grid.x_min()) / h + 1e-9));
  kernels::WignerLayout kl;
  for (std::size_t i = first; i <= last && i < grid.size(); i += axes.x_stride) kl.rows.push_back(i);
  if (kl.rows.size() < Grid::kMinPoints) {
    throw DomainError("Wigner x-axis has fewer than 16 rows");
  }
  kl.fft_length = axes.padding * grid.size();
  const double dy = kPi / (static_cast<double>(kl.fft_length) * h);
  const long reach = static_cast<long>(std::floor(axes.y_max / dy));
  if (2 * reach + 1 < static_cast<long>(Grid::kMinPoints) ||
      reach >= static_cast<long>(kl.fft_length / 2)) {
    throw DomainError("Wigner y-axis must hold between 16 bins and the transform length");
  }
  for (long k = -reach; k <= reach; ++k) kl.bins.push_back(k);
  const Grid x_axis(grid[kl.rows.front()], grid[kl.rows.back()], kl.rows.size());
  const Grid y_axis(-static_cast<double>(reach) * dy, static_cast<double>(reach) * dy,
                    kl.bins.size());
  return Layout{std::move(kl), x_axis, y_axis};
}

}  // namespace

WignerGrid wigner(const WaveFunction& psi, const WignerAxes& axes) {
  Layout layout = make_layout(psi.grid(), axes);
  std::vector<double> values(layout.kernel.rows.size() * layout.kernel.bins.size());
  const double max_imag =
      kernels::parallel::wigner_rows(psi.amplitudes(), psi.grid().spacing(), layout.kernel, values);
  return WignerGrid{layout.x_axis, layout.y_axis, std::move(values), max_imag};
}

WignerStats wigner_stats(const WignerGrid& w, const WaveFunction& psi) {
  const std::size_t nx = w.x_axis.size();
  const std::size_t ny = w.y_axis.size();
  WignerStats st;
  st.max_imag = w.max_imag;
  st.min = std::numeric_limits<double>::infinity();
  st.max = -std::numeric_limits<double>::infinity();
  for (double v : w.values) {
    st.min = std::min(st.min, v);
    st.max = std::max(st.max, v);
  }

  std::vector<double> row_integral(nx);
  std::vector<double> scratch(ny);
  const double h = psi.grid().spacing();
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t k = 0; k < ny; ++k) scratch[k] = w.at(i, k);
    row_integral[i] = numerics::trapezoid(scratch, w.y_axis.spacing());
    const auto idx = static_cast<std::size_t>(std::lround((w.x_axis[i] - psi.grid().x_min()) / h));
    st.marginal_x_error =
        std::max(st.marginal_x_error, std::abs(row_integral[i] - std::norm(psi[idx])));
  }
  st.integral = numerics::trapezoid(row_integral, w.x_axis.spacing());

  const std::vector<double> ys = w.y_axis.points();
  const std::vector<cplx> fpsi = numerics::fourier_at(psi, ys);
  scratch.assign(nx, 0.0);
  for (std::size_t k = 0; k < ny; ++k) {
    for (std::size_t i = 0; i < nx; ++i) scratch[i] = w.at(i, k);
    const double col = numerics::trapezoid(scratch, w.x_axis.spacing());
    st.marginal_y_error = std::max(st.marginal_y_error, std::abs(col - std::norm(fpsi[k])));
  }
  return st;
}

double wigner_peak_momentum(const WignerGrid& w, double y_min) {
  const std::size_t ny = w.y_axis.size();
  double best = -std::numeric_limits<double>::infinity();
  std::size_t bi = 0;
  std::size_t bk = 0;
  for (std::size_t i = 0; i < w.x_axis.size(); ++i) {
    for (std::size_t k = 0; k < ny; ++k) {
      if (w.y_axis[k] > y_min && w.at(i, k) > best) {
        best = w.at(i, k);
        bi = i;
        bk = k;
      }
    }
  }
  if (!std::isfinite(best)) throw DomainError("no Wigner bins above the requested momentum");
  if (bk == 0 || bk + 1 >= ny) return w.y_axis[bk];
  const double a = w.at(bi, bk - 1);
  const double b = w.at(bi, bk);
  const double c = w.at(bi, bk + 1);
  if (a > b || c > b) return w.y_axis[bk];  // maximum sits on the y_min edge
  const double denom = a - 2.0 * b + c;
  const double shift = denom < 0.0 ? 0.5 * (a - c) / denom : 0.0;
  return w.y_axis[bk] + shift * w.y_axis.spacing();
}

}  // namespace catgate::analysis
