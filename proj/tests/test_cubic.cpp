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
#include "catgate/cubic.hpp"
#include "catgate/errors.hpp"
#include "catgate/gate.hpp"
#include "catgate/numerics.hpp"
#include "catgate/states.hpp"

using namespace catgate;

TEST_SUITE("cubic") {

TEST_CASE("gamma = 0, s = 1 reduces to the vacuum ancilla") {
  const WaveFunction vac = states::make_vacuum(Grid::default_grid());
  for (double y : {0.0, 0.8, -1.7}) {
    const CollapseResult c = cubic::cubic_collapse(vac, CubicGateConfig{0.0, y, 1.0});
    const CollapseResult f = gate::collapse(vac, ResourceSpec::fock(0), y);
    double worst = 0.0;
    for (std::size_t i = 0; i < c.psi_out.size(); ++i) {
      worst = std::max(worst, std::abs(c.psi_out[i] - f.psi_out[i]));
    }
    CHECK(worst < 1e-6);
    CHECK(c.norm_N == doctest::Approx(f.norm_N).epsilon(1e-10));
  }
}

TEST_CASE("squeezing in decibels") {
  CHECK(cubic::squeezing_db(1.0) == 0.0);
  CHECK(cubic::squeezing_db(0.1) == doctest::Approx(20.0));
  CHECK(cubic::squeezing_db(0.171) == doctest::Approx(15.34).epsilon(1e-3));
  CHECK(cubic::squeezing_db(0.241) == doctest::Approx(12.36).epsilon(1e-3));
}

TEST_CASE("reference cat and infidelity") {
  const Grid g = Grid::default_grid();
  const WaveFunction ref = cubic::reference_cat(g);
  CHECK(ref.norm_squared() == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(cubic::infidelity(ref) < 1e-12);
  CHECK(cubic::infidelity(cubic::reference_cat(g, 3), 5) > 0.01);
}

TEST_CASE("config validation") {
  CHECK_NOTHROW((CubicGateConfig{0.334, 11.012, 0.241}.validate()));
  CHECK_THROWS_AS((CubicGateConfig{-0.1, 1.0, 0.5}.validate()), DomainError);
  CHECK_THROWS_AS((CubicGateConfig{0.1, 1.0, 0.01}.validate()), DomainError);
  CHECK_THROWS_AS((CubicGateConfig{0.1, std::nan(""), 0.5}.validate()), DomainError);
  CHECK(CubicGateConfig{0.2, 1.0, 0.5}.resource() == ResourceSpec::cubic_phase(0.2, 0.5));
}

TEST_CASE("cubic gate outputs are odd-cat-like near the ladder points") {
  const WaveFunction vac = states::make_vacuum(Grid::default_grid());
  const CollapseResult weak = cubic::cubic_collapse(vac, CubicGateConfig{0.075, 2.486, 0.171});
  const CollapseResult strong = cubic::cubic_collapse(vac, CubicGateConfig{0.334, 11.012, 0.241});
  CHECK(cubic::infidelity(weak.psi_out) < 0.2);
  CHECK(cubic::infidelity(strong.psi_out) < cubic::infidelity(weak.psi_out));
  CHECK(strong.norm_N < weak.norm_N);
}

TEST_CASE("squeezing scan") {
  const WaveFunction vac = states::make_vacuum(Grid::default_grid());
  const std::vector<double> ss{0.2, 0.3, 0.5};
  const auto scan = cubic::squeezing_scan(vac, 0.075, 2.486, ss);
  REQUIRE(scan.size() == 3);
  for (std::size_t i = 0; i < ss.size(); ++i) {
    CHECK(scan[i].s == ss[i]);
    CHECK(scan[i].inverse_s == doctest::Approx(1.0 / ss[i]));
    CHECK(scan[i].db == doctest::Approx(cubic::squeezing_db(ss[i])));
    const CollapseResult r = cubic::cubic_collapse(vac, CubicGateConfig{0.075, 2.486, ss[i]});
    CHECK(scan[i].P == doctest::Approx(r.norm_N).epsilon(1e-14));
    CHECK(scan[i].infidelity == doctest::Approx(cubic::infidelity(r.psi_out)).epsilon(1e-12));
  }
}

}  // TEST_SUITE
