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

#include "catgate/errors.hpp"
#include "catgate/numerics.hpp"
#include "catgate/states.hpp"
#include "oracles.hpp"

using namespace catgate;
using numerics::kPi;

TEST_SUITE("states") {

TEST_CASE("resource specs validate their parameters") {
  CHECK(ResourceSpec::fock(5).is_fock());
  CHECK(ResourceSpec::fock(5).as_fock().n == 5);
  CHECK(ResourceSpec::cubic_phase(0.075, 0.171).is_cubic());
  CHECK(ResourceSpec::cubic_phase(0.075, 0.171).as_cubic().gamma == 0.075);
  CHECK_THROWS_AS(ResourceSpec::fock(-1), DomainError);
  CHECK_THROWS_AS(ResourceSpec::fock(65), DomainError);
  CHECK_THROWS_AS(ResourceSpec::cubic_phase(1.5, 0.5), DomainError);
  CHECK_THROWS_AS(ResourceSpec::cubic_phase(0.1, 0.0), DomainError);
  CHECK_THROWS_AS(ResourceSpec::cubic_phase(0.1, 1.5), DomainError);
  CHECK_THROWS_AS(ResourceSpec::fock(2).as_cubic(), std::bad_variant_access);
  CHECK(ResourceSpec::fock(3) == ResourceSpec::fock(3));
  CHECK_FALSE(ResourceSpec::fock(3) == ResourceSpec::cubic_phase(0.0, 1.0));
  CHECK(ResourceSpec::fock(3).describe().find('3') != std::string::npos);
  CHECK(parity_of(4) == Parity::Even);
  CHECK(parity_of(5) == Parity::Odd);
  CHECK(std::string(to_string(Parity::Odd)) == "odd");
}

TEST_CASE("standard states are normalized") {
  const Grid g = Grid::default_grid();
  CHECK(states::make_vacuum(g).norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
  for (int n : {0, 1, 5, 12, 30}) {
    CHECK(states::make_fock(n, g).norm_squared() == doctest::Approx(1.0).epsilon(1e-10));
  }
  CHECK(states::make_coherent(cplx(1.2, -0.4), g).norm_squared() ==
        doctest::Approx(1.0).epsilon(1e-12));
  const WaveFunction cp = states::make_cubic_phase(0.075, 0.5, g);
  CHECK(cp.norm_squared() == doctest::Approx(1.0).epsilon(1e-10));
  for (double theta : {0.0, 0.3, -1.2}) {
    for (Parity par : {Parity::Even, Parity::Odd}) {
      const WaveFunction cat = states::make_cat(CatParams{std::sqrt(11.0), theta, par}, g);
      CHECK(cat.norm_squared() == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
}

TEST_CASE("fock states match the explicit Hermite form") {
  const Grid g = Grid::default_grid();
  const WaveFunction f = states::make_fock(6, g);
  for (std::size_t i = 1500; i < 2600; i += 37) {
    CHECK(f[i].real() == doctest::Approx(oracle::fock_raw(6, g[i])).epsilon(1e-10).scale(1e-12));
    CHECK(f[i].imag() == 0.0);
  }
}

TEST_CASE("coherent state moments and phase") {
  const Grid g = Grid::default_grid();
  const double q0 = std::sqrt(2.0) * 0.9;
  const WaveFunction psi = states::make_coherent(cplx(0.9, 0.0), g);
  CHECK(psi.second_moment() == doctest::Approx(q0 * q0 + 0.5).epsilon(1e-10));

  // alpha = i p / sqrt(2) is e^{ipx} times the vacuum.
  const double p = 2.5;
  const WaveFunction boosted = states::make_coherent(cplx(0.0, p / std::sqrt(2.0)), g);
  const WaveFunction vac = states::make_vacuum(g);
  for (std::size_t i = 1800; i < 2300; i += 41) {
    CHECK(std::abs(boosted[i] - std::polar(1.0, p * g[i]) * vac[i]) < 1e-14);
  }
}

TEST_CASE("cat states match their closed forms") {
  const Grid g = Grid::default_grid();
  const double p = std::sqrt(11.0);
  const WaveFunction odd = states::make_cat(CatParams{p, 0.0, Parity::Odd}, g);
  const double norm = std::sqrt(std::sqrt(kPi) / 2.0 * (1.0 - std::exp(-p * p)));
  for (std::size_t i = 1700; i < 2400; i += 29) {
    const double x = g[i];
    const cplx expected = cplx(0.0, 1.0) * std::sin(p * x) * std::exp(-0.5 * x * x) / norm;
    CHECK(std::abs(odd[i] - expected) < 1e-12);
  }
  const WaveFunction even = states::make_cat(CatParams{1.0, 0.0, Parity::Even}, g);
  CHECK(std::abs(even[2047] + even[2048]) > 0.0);
  // Odd cats vanish at the origin for theta = 0; the grid has no point at 0, so
  // compare the two neighbours instead.
  CHECK(std::abs(odd[2047] + odd[2048]) < 1e-12);
}

TEST_CASE("cat states with theta and theta + pi coincide up to sign") {
  const Grid g = Grid::default_grid();
  const WaveFunction a = states::make_cat(CatParams{2.0, 0.4, Parity::Odd}, g);
  const WaveFunction b = states::make_cat(CatParams{2.0, 0.4 + kPi, Parity::Odd}, g);
  CHECK(std::abs(std::abs(numerics::overlap(a, b)) - 1.0) < 1e-10);
}

TEST_CASE("state constructors reject bad input") {
  const Grid small = Grid::symmetric(4.0, 256);
  CHECK_THROWS_AS(states::make_vacuum(small), GridTooSmallError);
  CHECK_THROWS_AS(states::make_cubic_phase(0.1, 0.2, Grid::default_grid()), GridTooSmallError);
  CHECK_THROWS_AS(states::make_cat(CatParams{0.0, kPi / 2.0, Parity::Even}, Grid::default_grid()),
                  DomainError);
  CHECK_THROWS_AS(states::make_cat(CatParams{0.0, 0.0, Parity::Odd}, Grid::default_grid()),
                  DomainError);
}

TEST_CASE("wavefunction arithmetic") {
  const Grid g = Grid::default_grid();
  WaveFunction a = states::make_vacuum(g);
  const WaveFunction b = states::make_fock(1, g);
  const WaveFunction sum = a + b;
  CHECK(sum.norm_squared() == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(sum.normalized().norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
  a *= cplx(0.0, 2.0);
  CHECK(a.norm_squared() == doctest::Approx(4.0).epsilon(1e-12));
  CHECK_THROWS_AS(WaveFunction(g).normalized(), DomainError);
  CHECK_THROWS_AS(a + states::make_vacuum(Grid::symmetric(16.0, 2048)), GridMismatchError);
  CHECK(a.all_finite());
  CHECK_THROWS_AS(WaveFunction(g, std::vector<cplx>(3)), GridMismatchError);
}

}  // TEST_SUITE
