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

#include <doctest.h>

#include <cmath>

#include "catgate/analysis.hpp"
#include "catgate/errors.hpp"
#include "catgate/gate.hpp"
#include "catgate/numerics.hpp"
#include "catgate/semiclassical.hpp"
#include "catgate/states.hpp"

using namespace catgate;
using numerics::kPi;

TEST_SUITE("semiclassical") {

TEST_CASE("Fock mapping branches") {
  const MappingResult two = semiclassical::fock_mapping(5, 0.0, {0.0, 0.0});
  REQUIRE(two.branches.size() == 2);
  CHECK_FALSE(two.degenerate);
  CHECK(two.branches[0].p == doctest::Approx(std::sqrt(11.0)));
  CHECK(two.branches[1].p == doctest::Approx(-std::sqrt(11.0)));
  CHECK(two.branches[0].q == 0.0);

  const MappingResult shifted = semiclassical::fock_mapping(5, 1.0, {0.5, 0.25});
  REQUIRE(shifted.branches.size() == 2);
  CHECK(shifted.branches[0].p == doctest::Approx(0.25 + std::sqrt(11.0 - 0.25)));

  const MappingResult one = semiclassical::fock_mapping(0, 1.0, {0.0, 0.3});
  REQUIRE(one.branches.size() == 1);
  CHECK(one.degenerate);
  CHECK(one.branches[0].p == 0.3);

  CHECK(semiclassical::fock_mapping(1, 5.0, {0.0, 0.0}).branches.empty());
  CHECK_THROWS_AS(semiclassical::fock_mapping(-2, 0.0, {}), DomainError);
}

TEST_CASE("cubic mapping branches") {
  const double gamma = 0.334, y = 11.012;
  const MappingResult r = semiclassical::cubic_mapping(gamma, y, {0.0, 0.0}, 0.0);
  REQUIRE(r.branches.size() == 2);
  CHECK(r.branches[0].p == doctest::Approx(std::sqrt(y / (3.0 * gamma))));
  CHECK(semiclassical::cubic_mapping(gamma, -1.0, {0.0, 0.0}, 0.0).branches.empty());
  CHECK_THROWS_AS(semiclassical::cubic_mapping(0.0, y, {}, 0.0), DomainError);
}

TEST_CASE("phase derivative equals the momentum kick") {
  for (int n : {1, 5, 12}) {
    const double r = std::sqrt(2.0 * n + 1.0);
    for (double y_m : {0.0, 0.9}) {
      for (double x : {-1.5, -0.2, 0.4, 1.7}) {
        const double z = (x - y_m) / r;
        if (std::abs(z) > 0.95) continue;
        const double h = 1e-5;
        const double fd = (semiclassical::phase(n, (x + h - y_m) / r) -
                           semiclassical::phase(n, (x - h - y_m) / r)) /
                          (2.0 * h);
        CHECK(fd == doctest::Approx(semiclassical::delta_p(n, y_m, x)).epsilon(1e-8));
      }
    }
  }
}

TEST_CASE("phase endpoints and errors") {
  CHECK(semiclassical::phase(5, 0.0) == 0.0);
  CHECK(semiclassical::phase(5, 1.0) == doctest::Approx(11.0 * kPi / 4.0));
  CHECK(semiclassical::phase(5, -0.3) == doctest::Approx(-semiclassical::phase(5, 0.3)));
  CHECK_THROWS_AS(semiclassical::phase(5, 1.01), DomainError);
  CHECK_THROWS_AS(semiclassical::delta_p(0, 0.0, 2.0), DomainError);
}

TEST_CASE("added factor structure") {
  const Grid g = Grid::default_grid();
  const AddedFactor f = semiclassical::added_factor(5, 0.0, g);
  const double r = std::sqrt(11.0);
  for (std::size_t i = 0; i < g.size(); i += 13) {
    const double z = g[i] / r;
    if (std::abs(z) >= 1.0 - semiclassical::kCausticExclusion) {
      CHECK_FALSE(f.valid[i]);
      CHECK(f.values[i] == cplx{0.0, 0.0});
      continue;
    }
    CHECK(f.valid[i]);
    // Odd n: e^{i phi} - e^{-i phi} = 2 i sin phi.
    const double expected = 2.0 * std::sin(semiclassical::phase(5, z)) / std::pow(1.0 - z * z, 0.25);
    CHECK(std::abs(f.values[i] - cplx(0.0, expected)) < 1e-12);
  }
  const AddedFactor even = semiclassical::added_factor(4, 0.0, g);
  CHECK(std::abs(even.values[2048].imag()) < 1e-12);
}

TEST_CASE("semiclassical output approaches the exact output") {
  const WaveFunction vac = states::make_vacuum(Grid::default_grid());
  double previous = 0.0;
  for (int n : {3, 5, 10, 20}) {
    const WaveFunction approx = semiclassical::semiclassical_output(vac, n, 0.0);
    const CollapseResult exact = gate::collapse(vac, ResourceSpec::fock(n), 0.0);
    const double f = analysis::fidelity(approx, exact.psi_out);
    CHECK(f > 0.97);
    CHECK(f > previous);
    previous = f;
    const cplx ov = numerics::overlap(approx, exact.psi_out);
    CHECK(std::abs(ov.imag()) < 1e-10);
    CHECK(ov.real() > 0.0);
  }
}

TEST_CASE("linearized Fock gate") {
  const LinearizedCat lin = semiclassical::linearize(5, 0.0);
  CHECK(lin.theta == 0.0);
  CHECK(lin.p_plus == doctest::Approx(std::sqrt(11.0)));
  CHECK(lin.parity == Parity::Odd);
  const LinearizedCat off = semiclassical::linearize(4, 1.5);
  CHECK(off.p_plus == doctest::Approx(std::sqrt(9.0 - 2.25)));
  CHECK(off.theta == doctest::Approx(semiclassical::phase(4, -0.5)));
  CHECK(off.parity == Parity::Even);
  CHECK_THROWS_AS(semiclassical::linearize(1, 2.0), DomainError);
}

TEST_CASE("linearized cubic gate") {
  const LinearizedCat lin = semiclassical::cubic_linearize(0.334, 11.012);
  CHECK(lin.p_plus == doctest::Approx(std::sqrt(11.012 / (3.0 * 0.334))));
  CHECK(lin.parity == Parity::Odd);
  CHECK(lin.theta > -kPi / 2.0);
  CHECK(lin.theta <= kPi / 2.0);
  const double raw = -2.0 / 3.0 * std::pow(11.012, 1.5) / std::sqrt(3.0 * 0.334) - kPi / 4.0;
  const double turns = (raw - lin.theta) / kPi;
  CHECK(turns == doctest::Approx(std::round(turns)).epsilon(1e-12));
  CHECK_THROWS_AS(semiclassical::cubic_linearize(0.0, 1.0), DomainError);
  CHECK_THROWS_AS(semiclassical::cubic_linearize(0.1, 0.0), DomainError);
}

TEST_CASE("half-turn wrapping") {
  CHECK(semiclassical::wrap_half_turn(0.3) == doctest::Approx(0.3));
  CHECK(semiclassical::wrap_half_turn(kPi / 2.0) == doctest::Approx(kPi / 2.0));
  CHECK(semiclassical::wrap_half_turn(-kPi / 2.0) == doctest::Approx(kPi / 2.0));
  CHECK(semiclassical::wrap_half_turn(kPi + 0.2) == doctest::Approx(0.2));
  CHECK(semiclassical::wrap_half_turn(-7.0 * kPi - 0.1) == doctest::Approx(-0.1));
}

}  // TEST_SUITE
