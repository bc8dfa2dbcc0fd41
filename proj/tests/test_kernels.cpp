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
#include <stdexcept>

#include "catgate/kernels.hpp"
#include "catgate/numerics.hpp"
#include "catgate/states.hpp"

using namespace catgate;

TEST_SUITE("kernels") {

TEST_CASE("parallel Fourier sums equal the serial reference") {
  const WaveFunction psi = states::make_fock(7, Grid::default_grid());
  std::vector<double> ys;
  for (int k = -300; k <= 300; ++k) ys.push_back(0.04 * k);
  std::vector<cplx> a(ys.size()), b(ys.size());
  kernels::serial::fourier_sums(psi.grid().x_min(), psi.grid().spacing(), psi.amplitudes(), ys, a);
  kernels::parallel::fourier_sums(psi.grid().x_min(), psi.grid().spacing(), psi.amplitudes(), ys,
                                  b);
  CHECK(a == b);
}

TEST_CASE("parallel oscillatory sums equal the serial reference") {
  std::vector<double> ys;
  for (int k = -50; k <= 50; ++k) ys.push_back(0.25 * k);
  const kernels::OscillatoryPlan plan = numerics::plan_oscillatory(0.075, 0.3, 12.5);
  std::vector<cplx> a(ys.size()), b(ys.size());
  kernels::serial::oscillatory_sums(plan, ys, a);
  kernels::parallel::oscillatory_sums(plan, ys, b);
  CHECK(a == b);
}

TEST_CASE("parallel Wigner rows equal the serial reference") {
  const WaveFunction psi = states::make_cat(CatParams{2.0, 0.3, Parity::Odd}, Grid::default_grid());
  kernels::WignerLayout layout;
  layout.fft_length = 2 * psi.size();
  for (std::size_t i = 1500; i < 2600; i += 10) layout.rows.push_back(i);
  for (long k = -200; k <= 200; ++k) layout.bins.push_back(k);
  std::vector<double> a(layout.rows.size() * layout.bins.size());
  std::vector<double> b(a.size());
  const double ia = kernels::serial::wigner_rows(psi.amplitudes(), psi.grid().spacing(), layout, a);
  const double ib =
      kernels::parallel::wigner_rows(psi.amplitudes(), psi.grid().spacing(), layout, b);
  CHECK(a == b);
  CHECK(ia == ib);
}

TEST_CASE("ordered_map keeps input order and propagates errors") {
  const auto sq = kernels::parallel::ordered_map(100, [](std::size_t i) { return i * i; });
  const auto ref = kernels::serial::ordered_map(100, [](std::size_t i) { return i * i; });
  CHECK(sq == ref);
  CHECK_THROWS_AS(kernels::parallel::ordered_map(10,
                                                 [](std::size_t i) -> int {
                                                   if (i == 7) throw std::runtime_error("boom");
                                                   return 0;
                                                 }),
                  std::runtime_error);
}

}  // TEST_SUITE
