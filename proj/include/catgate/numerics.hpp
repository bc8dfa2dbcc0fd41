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

// Special functions, transforms and quadrature shared by the gate pipeline.
//
// Conventions: the Fourier transform is
//     [F psi](y) = (2 pi)^(-1/2) Integral dx exp(-i y x) psi(x),
// and all grid integrals use the trapezoid rule.

#pragma once

#include <cstddef>
#include <numbers>
#include <span>
#include <vector>

#include "catgate/grid.hpp"
#include "catgate/kernels.hpp"

namespace catgate::numerics {

inline constexpr double kPi = std::numbers::pi;
inline constexpr int kMaxFockNumber = 64;

double trapezoid(std::span<const double> f, double h);
cplx trapezoid(std::span<const cplx> f, double h);

// ---------------------------------------------------------------------------
// Hermite functions

/// psi^(n)(x) = H_n(x) exp(-x^2/2) / (pi^(1/4) sqrt(2^n n!)), via the
/// normalized three-term recurrence (no overflow for n <= 64).
double hermite_function_value(int n, double x);

/// Half-width the grid must cover for psi^(n): sqrt(2n+1) + 5.
double hermite_support(int n);

/// psi^(n) sampled on `grid`. Throws DomainError for n outside [0, 64] and
/// GridTooSmallError when the grid misses the support.
WaveFunction hermite_function(int n, const Grid& grid);

// ---------------------------------------------------------------------------
// Fourier transform

struct FourierOptions {
  /// Largest local wavenumber |d arg(psi)/dx| the caller expects in psi.
  /// Zero skips the Nyquist check.
  double max_wavenumber = 0.0;
};

/// Symmetric grid of the FFT conjugate variable: same point count,
/// spacing 2 pi / (N h).
Grid conjugate_grid(const Grid& grid);

/// Continuum Fourier transform of psi evaluated on conjugate_grid(psi.grid())
/// by FFT with explicit phase and normalization corrections. The input grid
/// must be symmetric about zero. Throws NyquistError when
/// options.max_wavenumber is not resolved by the grid spacing.
WaveFunction fourier_transform(const WaveFunction& psi, FourierOptions options = {});

/// Same transform evaluated at arbitrary points by direct trapezoid sums.
std::vector<cplx> fourier_at(const WaveFunction& psi, std::span<const double> ys);

/// Integral of conj(a) b over the shared grid.
cplx overlap(const WaveFunction& a, const WaveFunction& b);

// ---------------------------------------------------------------------------
// Cubic-phase resource: Fourier factor of
//     psi_cubic(x) = (s^2/pi)^(1/4) exp(-s^2 x^2 / 2) exp(i gamma x^3).

inline constexpr double kCubicGammaMax = 1.0;
inline constexpr double kCubicSqueezeMin = 0.05;
/// Sample budget of the oscillatory quadrature.
inline constexpr std::size_t kOscillatorySampleBudget = std::size_t{1} << 26;

/// Throws DomainError unless 0 <= gamma <= 1 and 0.05 <= s <= 1.
void check_cubic_parameters(double gamma, double s);

/// Quadrature plan for |y| <= y_abs_max: window [-8/s, 8/s] and a step of
/// pi / (4 * max phase slope). Throws NyquistError when the plan needs more
/// than 2^26 samples.
kernels::OscillatoryPlan plan_oscillatory(double gamma, double s, double y_abs_max);

/// [F psi_cubic](y) by direct trapezoid quadrature of the oscillatory
/// integrand.
cplx oscillatory_fourier_factor(double gamma, double s, double y);

/// Batched version, parallel over ys.
std::vector<cplx> oscillatory_fourier_factor(double gamma, double s,
                                             std::span<const double> ys);

/// [F psi_cubic](y) in closed form. Shifting the integration line by
/// -i s^2/(6 gamma) removes the quadratic term and leaves a real-argument Airy
/// integral:
///     (s^2/pi)^(1/4) sqrt(2 pi) k Ai(-k (y - s^4/(12 gamma)))
///         * exp(s^2 sigma^2 / 3 - y sigma),
/// with k = (3 gamma)^(-1/3) and sigma = s^2/(6 gamma). The value is real.
/// gamma = 0 reduces to the squeezed Gaussian (1/s)(s^2/pi)^(1/4)
/// exp(-y^2/(2 s^2)).
double cubic_fourier_factor_closed_form(double gamma, double s, double y);

/// Airy function Ai(x).
double airy_ai(double x);

// ---------------------------------------------------------------------------
// Gauss-Legendre quadrature

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule mapped to [a, b].
QuadratureRule gauss_legendre(int n, double a, double b);

}  // namespace catgate::numerics
