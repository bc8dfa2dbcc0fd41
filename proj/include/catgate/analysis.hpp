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

#include <cstddef>
#include <vector>

#include "catgate/grid.hpp"
#include "catgate/states.hpp"

namespace catgate {

/// Requested phase-space window. Rows are taken from the wavefunction grid
/// (every `x_stride`-th point inside [x_min, x_max]); momentum bins are those
/// of the zero-padded transform with |y| <= y_max.
struct WignerAxes {
  double x_min = -8.0;
  double x_max = 8.0;
  std::size_t x_stride = 1;
  double y_max = 8.0;
  std::size_t padding = 2;
};

struct WignerGrid {
  Grid x_axis;
  Grid y_axis;
  std::vector<double> values;  // row-major, values[i * y_axis.size() + k]
  double max_imag = 0.0;       // largest discarded imaginary part

  double at(std::size_t i, std::size_t k) const { return values[i * y_axis.size() + k]; }
};

struct WignerStats {
  double integral = 0.0;
  double min = 0.0;
  double max = 0.0;
  double max_imag = 0.0;
  double marginal_x_error = 0.0;  // max |int W dy - |psi(x)|^2|
  double marginal_y_error = 0.0;  // max |int W dx - |F psi(y)|^2|
};

struct AcceptanceWindow {
  double d = 0.0;
  int n_quadrature = 64;
};

struct MixedFidelity {
  double F_mix = 0.0;
  double P_mix = 0.0;
};

namespace analysis {

/// W(x, y) = (1/pi) int dz psi*(x + z) psi(x - z) e^{2iyz}.
WignerGrid wigner(const WaveFunction& psi, const WignerAxes& axes = {});

/// Normalization, extrema and marginal residuals. The x-marginal needs the
/// full momentum range to be captured by the axes; the y-marginal needs rows
/// spanning the support of psi with stride 1.
WignerStats wigner_stats(const WignerGrid& w, const WaveFunction& psi);

/// Momentum of the largest W along y > y_min (parabolic refinement).
double wigner_peak_momentum(const WignerGrid& w, double y_min);

/// |<a|b>|^2 / (<a|a><b|b>).
double fidelity(const WaveFunction& a, const WaveFunction& b);

/// Against the linearized cat with the outcome's own theta and p_plus.
double fidelity_coh(const WaveFunction& psi_out, int n, double y_m);

/// Against the y_m = 0 cat: p_plus = sqrt(2n + 1), theta = 0.
double fidelity_cat(const WaveFunction& psi_out, int n);

/// Acceptance-window average over y_m in [-d/2, d/2], weighted by P(y_m),
/// by Gauss-Legendre quadrature.
MixedFidelity fidelity_mix(const WaveFunction& psi_in, int n, const AcceptanceWindow& window);

/// Relative phase theta of the cat form (sin or cos of theta + p_plus x)
/// that best matches psi, reduced to (-pi/2, pi/2].
double effective_cat_phase(const WaveFunction& psi, double p_plus, Parity parity);

}  // namespace analysis
}  // namespace catgate
