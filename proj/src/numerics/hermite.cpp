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
#include <string>

#include "catgate/errors.hpp"
#include "catgate/numerics.hpp"

namespace catgate::numerics {

namespace {

void check_order(int n) {
  if (n < 0 || n > kMaxFockNumber) {
    throw DomainError("Hermite order " + std::to_string(n) + " outside [0, " +
                      std::to_string(kMaxFockNumber) + "]");
  }
}

}  // namespace

double trapezoid(std::span<const double> f, double h) {
  if (f.empty()) return 0.0;
  double sum = 0.0;
  for (double v : f) sum += v;
  sum -= 0.5 * (f.front() + f.back());
  return h * sum;
}

cplx trapezoid(std::span<const cplx> f, double h) {
  if (f.empty()) return {0.0, 0.0};
  cplx sum{0.0, 0.0};
  for (const cplx& v : f) sum += v;
  sum -= 0.5 * (f.front() + f.back());
  return h * sum;
}

double hermite_function_value(int n, double x) {
  check_order(n);
  // psi_{k+1} = x sqrt(2/(k+1)) psi_k - sqrt(k/(k+1)) psi_{k-1}
  const double psi0 = std::pow(kPi, -0.25) * std::exp(-0.5 * x * x);
  if (n == 0) return psi0;
  double prev = psi0;
  double cur = std::sqrt(2.0) * x * psi0;
  for (int k = 1; k < n; ++k) {
    const double kd = static_cast<double>(k);
    const double next = x * std::sqrt(2.0 / (kd + 1.0)) * cur -
                        std::sqrt(kd / (kd + 1.0)) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double hermite_support(int n) { return std::sqrt(2.0 * n + 1.0) + 5.0; }

WaveFunction hermite_function(int n, const Grid& grid) {
  check_order(n);
  const double w = hermite_support(n);
  if (!grid.covers(-w, w)) {
    throw GridTooSmallError("grid must cover [-" + std::to_string(w) + ", " +
                            std::to_string(w) + "] for Fock state n=" +
                            std::to_string(n));
  }
  WaveFunction psi(grid);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    psi[i] = hermite_function_value(n, grid[i]);
  }
  return psi;
}

}  // namespace catgate::numerics
