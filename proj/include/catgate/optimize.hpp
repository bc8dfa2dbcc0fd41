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

#include <functional>

namespace catgate::numerics {

struct SearchResult {
  double x = 0.0;
  double value = 0.0;
  int iterations = 0;
};

/// Golden-section search for a maximum of f on [a, b].
SearchResult golden_section_maximize(const std::function<double(double)>& f, double a,
                                     double b, double tol = 1e-8, int max_iter = 200);

/// Bisection for f(x) = 0 given f(a) and f(b) of opposite sign. Stops when
/// the bracket is narrower than tol; returns its midpoint. Throws
/// NotConvergedError if f(a) and f(b) do not bracket a root.
SearchResult bisect(const std::function<double(double)>& f, double a, double b,
                    double tol, int max_iter = 200);

}  // namespace catgate::numerics
