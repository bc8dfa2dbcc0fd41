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

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catgate/cubic.hpp"
#include "catgate/errors.hpp"
#include "catgate/grid.hpp"

namespace catgate::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;
inline constexpr int kExitIo = 4;

inline constexpr const char* kGridEnvVar = "CATGATE_GRID";

class UsageError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

struct Range {
  double lo = 0.0;
  double hi = 0.0;
};

/// "a..b" or a single value "a" (lo == hi).
Range parse_range(std::string_view text);

/// Integer form of parse_range, e.g. "1..10".
std::vector<int> parse_int_range(std::string_view text);

/// "xmin,xmax,n".
Grid parse_grid(std::string_view text);

/// "gamma,y_m,s".
CubicGateConfig parse_cubic(std::string_view text);

/// Grid from the flag if given, else from $CATGATE_GRID, else the default grid.
Grid resolve_grid(const std::optional<std::string>& flag);

/// lo, lo + step, ... up to hi (inclusive within rounding).
std::vector<double> sample_range(Range range, double step);

/// Runs the command line; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace catgate::cli
