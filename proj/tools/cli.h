// Copyright 2026 The holtrans Authors.
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

// The holtrans driver. Exit status: 0 success, 1 a proof, type or article
// failure, 2 a usage or I/O failure.

#ifndef HOLTRANS_TOOLS_CLI_H_
#define HOLTRANS_TOOLS_CLI_H_

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace holtrans::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr const char* kStatsFile = "holtrans.stats";

// One translated package.
struct PackageStats {
  std::string package;
  std::uint64_t input_bytes = 0;
  std::uint64_t output_bytes = 0;
  std::uint64_t input_gzip = 0;
  std::uint64_t output_gzip = 0;
  double translate_seconds = 0;
  double verify_seconds = 0;
  std::uint64_t theorems = 0;
  std::uint64_t share_hits = 0;

  friend bool operator==(const PackageStats&, const PackageStats&) = default;
};

// Line-oriented `key=value` records, one package per line.
void WriteStats(std::ostream& out, const std::vector<PackageStats>& rows);
std::vector<PackageStats> ReadStats(std::istream& in);

// Sum of every row, named "Total".
PackageStats Total(const std::vector<PackageStats>& rows);

// Aligned table with a Total row.
std::string FormatTable(const std::vector<PackageStats>& rows);
std::string FormatJson(const std::vector<PackageStats>& rows);

// Size of `data` after gzip at the default level.
std::uint64_t GzipSize(std::string_view data);

// Fuel from HOLTRANS_FUEL, or the kernel default when unset or malformed.
std::uint64_t DefaultFuel();

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
// `args` excludes the program name.
int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace holtrans::cli

#endif  // HOLTRANS_TOOLS_CLI_H_
