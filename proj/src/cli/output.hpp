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

#include <fstream>
#include <json.hpp>
#include <string>
#include <vector>

namespace catgate::cli {

using Json = nlohmann::ordered_json;

/// Twelve significant digits, shortest form.
std::string format_number(double v);

/// Numbers in a JSON document rounded to twelve significant digits, so that
/// reruns serialize identically across platforms.
double json_number(double v);

/// CSV with '#' comment lines, one header row and fixed number formatting.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::vector<std::string>& comments,
            const std::vector<std::string>& columns);

  void row(const std::vector<double>& values);
  void close();
  const std::string& path() const { return path_; }

 private:
  std::string path_;
  std::size_t columns_;
  std::ofstream out_;
};

void write_json(const std::string& path, const Json& doc);

}  // namespace catgate::cli
