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

#include <string>
#include <variant>

#include "catgate/grid.hpp"

namespace catgate {

enum class Parity { Even, Odd };

inline Parity parity_of(int n) { return (n % 2 == 0) ? Parity::Even : Parity::Odd; }
const char* to_string(Parity p);

/// Ancilla resource: Fock state |n>, or a cubic phase state made from
/// momentum-squeezed vacuum (factor s) with cubic nonlinearity gamma.
class ResourceSpec {
 public:
  struct Fock {
    int n = 0;
  };
  struct CubicPhase {
    double gamma = 0.0;
    double s = 1.0;
  };

  static ResourceSpec fock(int n);
  static ResourceSpec cubic_phase(double gamma, double s);

  bool is_fock() const noexcept { return std::holds_alternative<Fock>(value_); }
  bool is_cubic() const noexcept { return std::holds_alternative<CubicPhase>(value_); }
  const Fock& as_fock() const { return std::get<Fock>(value_); }
  const CubicPhase& as_cubic() const { return std::get<CubicPhase>(value_); }

  std::string describe() const;

  friend bool operator==(const ResourceSpec&, const ResourceSpec&) = default;

 private:
  explicit ResourceSpec(std::variant<Fock, CubicPhase> v) : value_(v) {}
  std::variant<Fock, CubicPhase> value_;
};

inline bool operator==(const ResourceSpec::Fock& a, const ResourceSpec::Fock& b) {
  return a.n == b.n;
}
inline bool operator==(const ResourceSpec::CubicPhase& a,
                       const ResourceSpec::CubicPhase& b) {
  return a.gamma == b.gamma && a.s == b.s;
}

/// Superposition of two coherent states displaced by +-p_plus along the
/// momentum axis with relative phase theta.
struct CatParams {
  double p_plus = 0.0;
  double theta = 0.0;
  Parity parity = Parity::Even;
};

namespace states {

/// pi^(-1/4) exp(-x^2/2). The grid must cover [-6, 6].
WaveFunction make_vacuum(const Grid& grid);

/// Hermite function psi^(n).
WaveFunction make_fock(int n, const Grid& grid);

/// Glauber coherent state |alpha>, a = (q + ip)/sqrt(2):
/// pi^(-1/4) exp(-(x - q0)^2/2 + i p0 x - i q0 p0 / 2), q0 = sqrt(2) Re alpha,
/// p0 = sqrt(2) Im alpha. alpha = i p / sqrt(2) gives exp(i p x) psi^(0)(x).
WaveFunction make_coherent(cplx alpha, const Grid& grid);

/// (s^2/pi)^(1/4) exp(-s^2 x^2/2) exp(i gamma x^3). The grid must cover
/// [-6/s, 6/s].
WaveFunction make_cubic_phase(double gamma, double s, const Grid& grid);

/// Even:  sqrt(2) pi^(-1/4) cos(theta + p x) e^{-x^2/2} / sqrt(1 + cos 2theta e^{-p^2})
/// Odd:  i sqrt(2) pi^(-1/4) sin(theta + p x) e^{-x^2/2} / sqrt(1 - cos 2theta e^{-p^2})
WaveFunction make_cat(const CatParams& params, const Grid& grid);

}  // namespace states
}  // namespace catgate
