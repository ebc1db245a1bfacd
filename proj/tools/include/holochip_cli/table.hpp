// Copyright 2026 The holochip Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <filesystem>
#include <string>
#include <variant>
#include <vector>

namespace holochip::cli {

using Cell = std::variant<double, long long, bool, std::string>;

/// Column-named records rendered as RFC 4180 CSV or a JSON array of objects.
/// Reals are printed with 12 significant digits in both forms so output is
/// byte-stable.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> row);
  std::string to_csv() const;
  std::string to_json() const;
};

/// printf("%.12g"), with negative zero printed as 0.
std::string format_real(double value);

/// Writes to a sibling temporary file and renames it over `path`. Throws
/// std::runtime_error if either step fails; no partial file is left behind.
void write_atomically(const std::filesystem::path& path, const std::string& content);

}  // namespace holochip::cli
