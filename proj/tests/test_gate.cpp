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
#include <random>

#include "catgate/errors.hpp"
#include "catgate/gate.hpp"
#include "catgate/numerics.hpp"
#include "catgate/states.hpp"
#include "oracles.hpp"

using namespace catgate;
using numerics::kPi;

namespace {

// P_n(y) for a vacuum input: int e^{-x^2}/sqrt(pi) psi_n(y - x)^2 dx. The
// integrand is a polynomial times e^{-2 (x - y/2)^2 - y^2/2}, so Gauss-Hermite
// in u = sqrt(2) (x - y/2) is exact.
double analytic_probability(int n, double y) {
  static const oracle::GaussHermite gh = oracle::gauss_hermite(60);
  double acc = 0.0;
  for (std::size_t k = 0; k < gh.nodes.size(); ++k) {
    const double x = gh.nodes[k] / std::sqrt(2.0) + 0.5 * y;
    const double z = y - x;
    const double poly = oracle::fock_raw(n, z) * std::exp(0.5 * z * z);
    acc += gh.weights[k] * poly * poly;
  }
  return acc * std::exp(-0.5 * y * y) / std::sqrt(2.0 * kPi);
}

}  // namespace

TEST_SUITE("gate") {

TEST_CASE("analytic outcome density for Fock resources") {
  CHECK(analytic_probability(0, 0.7) == doctest::Approx(oracle::vacuum_probability(0.7)));
  const WaveFunction vac = states::make_vacuum(Grid::default_grid());
  for (int n : {0, 1, 2, 5, 9}) {
    for (double y : {-4.0, -1.3, 0.0, 0.5, 2.2, 6.0}) {
      const double p = gate::probability_density(vac, ResourceSpec::fock(n), y);
      CHECK(std::abs(p - analytic_probability(n, y)) < 1e-8);
    }
  }
}

TEST_CASE("fock n = 5 at y_m = 0") {
  const WaveFunction vac = states::make_vacuum(Grid::default_grid());
  const CollapseResult r = gate::collapse(vac, ResourceSpec::fock(5), 0.0);
  CHECK(r.norm_N == doctest::Approx(analytic_probability(5, 0.0)).epsilon(1e-10));
  CHECK(r.psi_out.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.y_m == 0.0);
  CHECK(r.resource == ResourceSpec::fock(5));
}

TEST_CASE("collapse agrees with a direct two-mode computation") {
  const Grid g = Grid::default_grid();
  const WaveFunction vac = states::make_vacuum(g);
  const std::vector<double> xs = g.points();
  for (int n = 0; n <= 3; ++n) {
    for (double y : {0.0, 1.1}) {
      const CollapseResult r = gate::collapse(vac, ResourceSpec::fock(n), y);
      const std::vector<cplx> ref = oracle::two_mode_collapse(n, y, xs, 12.0, 2401);
      double worst = 0.0;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        worst = std::max(worst, std::abs(r.psi_out[i] - ref[i]));
      }
      CHECK(worst < 1e-6);
    }
  }
}

TEST_CASE("random outcomes are consistent with the analytic density") {
  std::mt19937_64 rng(20260101);
  std::uniform_int_distribution<int> pick_n(0, 10);
  std::uniform_real_distribution<double> pick_y(-5.0, 5.0);
  const WaveFunction vac = states::make_vacuum(Grid::default_grid());
  for (int trial = 0; trial < 50; ++trial) {
    const int n = pick_n(rng);
    const double y = pick_y(rng);
    const CollapseResult r = gate::collapse(vac, ResourceSpec::fock(n), y);
    CHECK(std::abs(r.norm_N - analytic_probability(n, y)) < 1e-8);
    CHECK(r.norm_N == doctest::Approx(gate::probability_density(vac, ResourceSpec::fock(n), y)));
    CHECK(r.psi_out.norm_squared() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("Fock factor shortcut matches the numerical transform") {
  const WaveFunction vac = states::make_vacuum(Grid::default_grid());
  for (int n : {0, 3, 5, 8}) {
    for (double y : {0.0, 1.7, -2.4}) {
      const CollapseResult a = gate::collapse(vac, ResourceSpec::fock(n), y);
      const CollapseResult b = gate::collapse_via_transform(vac, n, y);
      double worst = 0.0;
      for (std::size_t i = 0; i < a.psi_out.size(); ++i) {
        worst = std::max(worst, std::abs(a.psi_out[i] - b.psi_out[i]));
      }
      CHECK(worst < 1e-7);
      CHECK(a.norm_N == doctest::Approx(b.norm_N).epsilon(1e-8));
    }
  }
}

TEST_CASE("outcome density is even in y_m for a vacuum input") {
  const WaveFunction vac = states::make_vacuum(Grid::default_grid());
  for (int n : {1, 4, 7}) {
    for (double y : {0.3, 1.9, 3.5}) {
      CHECK(gate::probability_density(vac, ResourceSpec::fock(n), y) ==
            doctest::Approx(gate::probability_density(vac, ResourceSpec::fock(n), -y))
                .epsilon(1e-12));
    }
  }
}

TEST_CASE("Fock outcome densities integrate to one") {
  const WaveFunction vac = states::make_vacuum(Grid::default_grid());
  for (int n : {0, 5, 10}) {
    const ResourceSpec res = ResourceSpec::fock(n);
    const auto [lo, hi] = gate::completeness_window(res);
    const double total = gate::integrated_probability(vac, res, lo, hi, 1201);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-6));
  }
}

TEST_CASE("cubic outcome density integrates to one") {
  const WaveFunction vac = states::make_vacuum(Grid::default_grid());
  const ResourceSpec res = ResourceSpec::cubic_phase(0.075, 0.171);
  const auto [lo, hi] = gate::completeness_window(res);
  CHECK(lo == -12.0);
  CHECK(hi > 12.0);
  const auto points = static_cast<std::size_t>(std::lround((hi - lo) / 0.1)) + 1;
  CHECK(gate::integrated_probability(vac, res, lo, hi, points) ==
        doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("cubic collapse routes agree") {
  const WaveFunction vac = states::make_vacuum(Grid::default_grid());
  const ResourceSpec res = ResourceSpec::cubic_phase(0.334, 0.241);
  const CollapseResult a = gate::collapse(vac, res, 11.012, FactorRoute::ClosedForm);
  const CollapseResult b = gate::collapse(vac, res, 11.012, FactorRoute::Quadrature);
  CHECK(a.norm_N == doctest::Approx(b.norm_N).epsilon(1e-8));
  CHECK(std::abs(numerics::overlap(a.psi_out, b.psi_out)) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("gamma = 0 cubic resource is a squeezed vacuum") {
  const WaveFunction vac = states::make_vacuum(Grid::default_grid());
  const double s = 0.6, y = 0.8;
  const double p = gate::probability_density(vac, ResourceSpec::cubic_phase(0.0, s), y);
  // |F psi_res(k)|^2 = e^{-k^2/s^2}/(s sqrt(pi)), convolved with e^{-x^2}/sqrt(pi).
  const double var = 0.5 + 0.5 * s * s;
  CHECK(p == doctest::Approx(std::exp(-0.5 * y * y / var) / std::sqrt(2.0 * kPi * var))
                 .epsilon(1e-10));
}

TEST_CASE("gate error paths") {
  const WaveFunction vac = states::make_vacuum(Grid::default_grid());
  CHECK_THROWS_AS(gate::collapse(vac, ResourceSpec::fock(3), 1000.0), ZeroProbabilityError);
  const std::vector<double> unordered{0.0, 1.0, 0.5};
  CHECK_THROWS_AS(gate::probability_scan(vac, ResourceSpec::fock(1), unordered), DomainError);
  const std::vector<double> bad{0.0, std::nan("")};
  CHECK_THROWS_AS(gate::probability_scan(vac, ResourceSpec::fock(1), bad), DomainError);
  CHECK_THROWS_AS(gate::integrated_probability(vac, ResourceSpec::fock(1), 1.0, 0.0, 10),
                  DomainError);
  const std::vector<double> ys{-1.0, 0.0, 1.0};
  const auto scan = gate::probability_scan(vac, ResourceSpec::fock(2), ys);
  REQUIRE(scan.size() == 3);
  CHECK(scan[1].y_m == 0.0);
  CHECK(scan[1].P == doctest::Approx(analytic_probability(2, 0.0)));
}

}  // TEST_SUITE
