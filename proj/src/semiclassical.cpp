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

#include "catgate/semiclassical.hpp"

#include <cmath>
#include <string>

#include "catgate/errors.hpp"
#include "catgate/gate.hpp"
#include "catgate/numerics.hpp"

namespace catgate::semiclassical {

using numerics::kPi;

namespace {

MappingResult branches_from(PhasePoint in, double radicand, double scale) {
  MappingResult r;
  if (radicand > 0.0) {
    const double d = std::sqrt(radicand * scale);
    r.branches = {{in.q, in.p + d}, {in.q, in.p - d}};
  } else if (radicand == 0.0) {
    r.branches = {{in.q, in.p}};
    r.degenerate = true;
  }
  return r;
}

void check_photon_number(int n) {
  if (n < 0 || n > numerics::kMaxFockNumber) {
    throw DomainError("photon number " + std::to_string(n) + " outside [0, 64]");
  }
}

}  // namespace

MappingResult fock_mapping(int n, double y_m, PhasePoint in) {
  check_photon_number(n);
  const double u = y_m - in.q;
  return branches_from(in, 2.0 * n + 1.0 - u * u, 1.0);
}

MappingResult cubic_mapping(double gamma, double y_m, PhasePoint in, double p2_in) {
  if (!(gamma > 0.0)) throw DomainError("cubic_mapping needs gamma > 0");
  return branches_from(in, y_m - in.q - p2_in, 1.0 / (3.0 * gamma));
}

double delta_p(int n, double y_m, double x) {
  check_photon_number(n);
  const double u = y_m - x;
  const double r = 2.0 * n + 1.0 - u * u;
  if (r < 0.0) {
    throw DomainError("x=" + std::to_string(x) + " lies outside the classical support");
  }
  return std::sqrt(r);
}

double phase(int n, double z) {
  if (!(std::abs(z) <= 1.0)) throw DomainError("phase needs |z| <= 1");
  return 0.5 * (2.0 * n + 1.0) * (z * std::sqrt(1.0 - z * z) + std::asin(z));
}

AddedFactor added_factor(int n, double y_m, const Grid& grid, double eps) {
  check_photon_number(n);
  const double r = std::sqrt(2.0 * n + 1.0);
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  AddedFactor f;
  f.values.assign(grid.size(), cplx{0.0, 0.0});
  f.valid.assign(grid.size(), false);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double z = (grid[i] - y_m) / r;
    if (std::abs(z) >= 1.0 - eps) continue;
    const double phi = phase(n, z);
    const cplx e = std::polar(1.0, phi);
    f.values[i] = std::pow(1.0 - z * z, -0.25) * (e + sign * std::conj(e));
    f.valid[i] = true;
  }
  return f;
}

WaveFunction semiclassical_output(const WaveFunction& psi_in, int n, double y_m) {
  const AddedFactor f = added_factor(n, y_m, psi_in.grid());
  WaveFunction approx(psi_in.grid());
  for (std::size_t i = 0; i < approx.size(); ++i) approx[i] = psi_in[i] * f.values[i];
  approx = approx.normalized();
  const CollapseResult exact = gate::collapse(psi_in, ResourceSpec::fock(n), y_m);
  const cplx ov = numerics::overlap(approx, exact.psi_out);
  if (std::abs(ov) > 0.0) approx *= ov / std::abs(ov);
  return approx;
}

LinearizedCat linearize(int n, double y_m) {
  check_photon_number(n);
  const double d = 2.0 * n + 1.0;
  if (!(y_m * y_m < d)) {
    throw DomainError("linearization needs y_m^2 < 2n + 1 (n=" + std::to_string(n) +
                      ", y_m=" + std::to_string(y_m) + ")");
  }
  return LinearizedCat{phase(n, -y_m / std::sqrt(d)), std::sqrt(d - y_m * y_m), parity_of(n)};
}

WaveFunction reference_cat(int n, double y_m, const Grid& grid) {
  return states::make_cat(linearize(n, y_m).cat(), grid);
}

double wrap_half_turn(double theta) {
  double t = std::fmod(theta, kPi);
  if (t > 0.5 * kPi) t -= kPi;
  if (t <= -0.5 * kPi) t += kPi;
  return t;
}

LinearizedCat cubic_linearize(double gamma, double y_m) {
  if (!(gamma > 0.0) || !(y_m > 0.0)) {
    throw DomainError("cubic linearization needs gamma > 0 and y_m > 0");
  }
  const double action = 2.0 / 3.0 * y_m * std::sqrt(y_m) / std::sqrt(3.0 * gamma);
  return LinearizedCat{wrap_half_turn(-action - 0.25 * kPi), std::sqrt(y_m / (3.0 * gamma)),
                       Parity::Odd};
}

}  // namespace catgate::semiclassical
