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

#include "catgate/optimize.hpp"

#include <cmath>

#include "catgate/errors.hpp"

namespace catgate::numerics {

SearchResult golden_section_maximize(const std::function<double(double)>& f, double a,
                                     double b, double tol, int max_iter) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  int iter = 0;
  while (std::abs(b - a) > tol && iter < max_iter) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
    ++iter;
  }
  const double x = 0.5 * (a + b);
  return {x, f(x), iter};
}

SearchResult bisect(const std::function<double(double)>& f, double a, double b,
                    double tol, int max_iter) {
  double fa = f(a);
  const double fb = f(b);
  if (fa == 0.0) return {a, fa, 0};
  if (fb == 0.0) return {b, fb, 0};
  if ((fa < 0.0) == (fb < 0.0)) {
    throw NotConvergedError("bisection interval does not bracket a root");
  }
  int iter = 0;
  while (std::abs(b - a) > tol && iter < max_iter) {
    const double m = 0.5 * (a + b);
    const double fm = f(m);
    ++iter;
    if (fm == 0.0) return {m, fm, iter};
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  if (std::abs(b - a) > tol) {
    throw NotConvergedError("bisection did not reach the requested tolerance");
  }
  const double x = 0.5 * (a + b);
  return {x, f(x), iter};
}

}  // namespace catgate::numerics
