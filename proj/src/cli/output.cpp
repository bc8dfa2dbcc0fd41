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

#include "cli/output.hpp"

#include <cstdio>
#include <cstdlib>

#include "catgate/cli.hpp"

namespace catgate::cli {

std::string format_number(double v) {
  if (v == 0.0) return "0";  // folds -0
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double json_number(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

CsvWriter::CsvWriter(const std::string& path, const std::vector<std::string>& comments,
                     const std::vector<std::string>& columns)
    : path_(path), columns_(columns.size()), out_(path, std::ios::out | std::ios::trunc) {
  if (!out_) throw IoError("cannot open '" + path + "' for writing");
  for (const auto& c : comments) out_ << "# " << c << '\n';
  for (std::size_t i = 0; i < columns.size(); ++i) out_ << (i ? "," : "") << columns[i];
  out_ << '\n';
}

void CsvWriter::row(const std::vector<double>& values) {
  if (values.size() != columns_) throw IoError("CSV row width does not match header");
  for (std::size_t i = 0; i < values.size(); ++i) {
    out_ << (i ? "," : "") << format_number(values[i]);
  }
  out_ << '\n';
}

void CsvWriter::close() {
  out_.close();
  if (!out_) throw IoError("failed writing '" + path_ + "'");
}

void write_json(const std::string& path, const Json& doc) {
  std::ofstream out(path, std::ios::out | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  out << doc.dump(2) << '\n';
  out.close();
  if (!out) throw IoError("failed writing '" + path + "'");
}

}  // namespace catgate::cli
