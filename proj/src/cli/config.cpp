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

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <string>

#include "catgate/cli.hpp"

namespace catgate::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view text, std::string_view what) {
  const std::string_view t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size() || !std::isfinite(v)) {
    throw UsageError("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  }
  return v;
}

long parse_long(std::string_view text, std::string_view what) {
  const std::string_view t = trim(text);
  long v = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size()) {
    throw UsageError("cannot parse " + std::string(what) + " from '" + std::string(text) + "'");
  }
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos
                                                                      : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

Range parse_range(std::string_view text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    const double v = parse_double(text, "value");
    return {v, v};
  }
  const Range r{parse_double(text.substr(0, dots), "range start"),
                parse_double(text.substr(dots + 2), "range end")};
  if (r.hi < r.lo) throw UsageError("range '" + std::string(text) + "' is decreasing");
  return r;
}

std::vector<int> parse_int_range(std::string_view text) {
  const std::size_t dots = text.find("..");
  const long lo = parse_long(text.substr(0, dots), "integer");
  const long hi = dots == std::string_view::npos ? lo : parse_long(text.substr(dots + 2), "integer");
  if (hi < lo || hi - lo > 1000) {
    throw UsageError("integer range '" + std::string(text) + "' is empty or too long");
  }
  std::vector<int> out;
  for (long v = lo; v <= hi; ++v) out.push_back(static_cast<int>(v));
  return out;
}

Grid parse_grid(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) {
    throw UsageError("grid must be 'xmin,xmax,n', got '" + std::string(text) + "'");
  }
  const long n = parse_long(parts[2], "grid size");
  if (n < 0) throw UsageError("grid size must be positive");
  return Grid(parse_double(parts[0], "grid xmin"), parse_double(parts[1], "grid xmax"),
              static_cast<std::size_t>(n));
}

CubicGateConfig parse_cubic(std::string_view text) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) {
    throw UsageError("cubic resource must be 'gamma,ym,s', got '" + std::string(text) + "'");
  }
  CubicGateConfig cfg{parse_double(parts[0], "gamma"), parse_double(parts[1], "y_m"),
                      parse_double(parts[2], "s")};
  cfg.validate();
  return cfg;
}

Grid resolve_grid(const std::optional<std::string>& flag) {
  if (flag) return parse_grid(*flag);
  if (const char* env = std::getenv(kGridEnvVar); env != nullptr && *env != '\0') {
    return parse_grid(env);
  }
  return Grid::default_grid();
}

std::vector<double> sample_range(Range range, double step) {
  if (!(step > 0.0)) throw UsageError("step must be positive");
  const auto count =
      static_cast<std::size_t>(std::floor((range.hi - range.lo) / step + 1e-9)) + 1;
  if (count > 10'000'000) throw UsageError("range holds too many samples");
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) out[i] = range.lo + static_cast<double>(i) * step;
  return out;
}

}  // namespace catgate::cli
