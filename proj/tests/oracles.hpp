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

// Reference implementations used only by the tests. None of them call into
// the library's numerics.

#pragma once

#include <complex>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;

/// Gauss-Hermite rule for weight e^{-x^2} (Golub-Welsch).
struct GaussHermite {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussHermite gauss_hermite(int n);

/// psi_n(x) from the physicists' polynomial H_n and the explicit
/// normalization (pi^{1/4} sqrt(2^n n!))^{-1}.
double fock_raw(int n, double x);

/// Direct two-mode discretization: Psi(x1, x2) = psi_in(x1) psi_n(x2) e^{i x1 x2},
/// projected on the ancilla momentum eigenstate e^{i y_m x2}/sqrt(2 pi).
/// Returns the normalized conditional state on x1 for a vacuum input.
std::vector<cplx> two_mode_collapse(int n, double y_m, const std::vector<double>& x1,
                                    double x2_half_width, int x2_points);

/// (2 pi)^{-1/2} int e^{-iyx} (s^2/pi)^{1/4} e^{-s^2 x^2/2 + i gamma x^3} dx by a
/// plain trapezoid over [-w, w] with the given step.
cplx cubic_factor_trapezoid(double gamma, double s, double y, double w, double step);

/// e^{-y^2/2}/sqrt(2 pi).
double vacuum_probability(double y);

/// Wigner function of an odd cat sin(p x) e^{-x^2/2} at (x, y), closed form.
double odd_cat_wigner(double p, double x, double y);

/// Overlap <alpha|beta> of Glauber coherent states.
cplx coherent_overlap(cplx alpha, cplx beta);

}  // namespace oracle
