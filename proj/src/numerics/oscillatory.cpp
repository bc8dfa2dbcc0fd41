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
#include <boost/math/special_functions/airy.hpp>
#include <cmath>
#include <string>

#include "catgate/errors.hpp"
#include "catgate/numerics.hpp"

namespace catgate::numerics {

namespace {

// Above this argument Ai is evaluated as exp(-zeta) * R(x) so that the
// exponential can be merged with the prefactor before exponentiation.
constexpr double kAiryAsymptoticThreshold = 8.0;

// Ai(x) = exp(-zeta) / (2 sqrt(pi) x^(1/4)) * sum_k (-1)^k u_k / zeta^k,
// zeta = 2/3 x^(3/2). Returns the factor multiplying exp(-zeta).
double airy_ai_reduced(double x, double zeta) {
  double term = 1.0;
  double sum = 1.0;
  for (int k = 1; k < 60; ++k) {
    const double kd = k;
    const double ratio = (6.0 * kd - 5.0) * (6.0 * kd - 3.0) * (6.0 * kd - 1.0) /
                         ((2.0 * kd - 1.0) * 216.0 * kd) / zeta;
    const double next = -term * ratio;
    if (std::abs(next) >= std::abs(term)) break;  // asymptotic series turns
    term = next;
    sum += term;
    if (std::abs(term) < 1e-17 * std::abs(sum)) break;
  }
  return sum / (2.0 * std::sqrt(kPi) * std::pow(x, 0.25));
}

}  // namespace

double airy_ai(double x) { return boost::math::airy_ai(x); }

void check_cubic_parameters(double gamma, double s) {
  if (!(gamma >= 0.0 && gamma <= kCubicGammaMax)) {
    throw DomainError("cubic nonlinearity gamma=" + std::to_string(gamma) +
                      " outside [0, 1]");
  }
  if (!(s >= kCubicSqueezeMin && s <= 1.0)) {
    throw DomainError("squeezing factor s=" + std::to_string(s) + " outside [0.05, 1]");
  }
}

kernels::OscillatoryPlan plan_oscillatory(double gamma, double s, double y_abs_max) {
  check_cubic_parameters(gamma, s);
  kernels::OscillatoryPlan plan;
  plan.gamma = gamma;
  plan.s = s;
  plan.window = 8.0 / s;
  // Largest |d/dx (gamma x^3 - y x)| on the window; the 4 s floor keeps the
  // Gaussian envelope resolved when the phase is flat.
  const double slope = 3.0 * gamma * plan.window * plan.window + std::abs(y_abs_max);
  plan.step = kPi / (4.0 * std::max(slope, 4.0 * s));
  const double intervals = std::ceil(2.0 * plan.window / plan.step);
  if (intervals + 1.0 > static_cast<double>(kOscillatorySampleBudget)) {
    throw NyquistError("oscillation of the cubic integrand is unresolvable within " +
                       std::to_string(kOscillatorySampleBudget) + " samples (gamma=" +
                       std::to_string(gamma) + ", s=" + std::to_string(s) + ")");
  }
  plan.samples = static_cast<std::size_t>(intervals) + 1;
  plan.step = 2.0 * plan.window / intervals;
  return plan;
}

cplx oscillatory_fourier_factor(double gamma, double s, double y) {
  const double ys[1] = {y};
  cplx out[1];
  kernels::serial::oscillatory_sums(plan_oscillatory(gamma, s, y), ys, out);
  return out[0];
}

std::vector<cplx> oscillatory_fourier_factor(double gamma, double s,
                                             std::span<const double> ys) {
  double y_abs_max = 0.0;
  for (double y : ys) y_abs_max = std::max(y_abs_max, std::abs(y));
  std::vector<cplx> out(ys.size());
  kernels::parallel::oscillatory_sums(plan_oscillatory(gamma, s, y_abs_max), ys, out);
  return out;
}

double cubic_fourier_factor_closed_form(double gamma, double s, double y) {
  check_cubic_parameters(gamma, s);
  const double s2 = s * s;
  const double amplitude = std::pow(s2 / kPi, 0.25);
  if (gamma == 0.0) {
    return amplitude / s * std::exp(-0.5 * y * y / s2);
  }
  const double k = std::cbrt(1.0 / (3.0 * gamma));
  const double sigma = s2 / (6.0 * gamma);
  const double arg = -k * (y - s2 * s2 / (12.0 * gamma));
  const double exponent = s2 * sigma * sigma / 3.0 - y * sigma;
  const double prefactor = amplitude * std::sqrt(2.0 * kPi) * k;
  if (arg > kAiryAsymptoticThreshold) {
    const double zeta = 2.0 / 3.0 * arg * std::sqrt(arg);
    return prefactor * std::exp(exponent - zeta) * airy_ai_reduced(arg, zeta);
  }
  return prefactor * std::exp(exponent) * airy_ai(arg);
}

}  // namespace catgate::numerics
