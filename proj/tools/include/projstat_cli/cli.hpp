// Copyright 2026 The projstat Authors.
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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace projstat::cli {

enum ExitCode : int {
  kOk = 0,
  kRejected = 1,
  kUsage = 2,
  kNumerical = 3,
};

enum class Format { kCsv, kJson };

/// Everything one invocation needs, after flag parsing.
struct RunConfig {
  std::string command;
  std::string ensemble = "unitary";
  int n = 4;
  int k = 2;
  int r = 2;
  bool r_given = false;
  std::uint64_t draws = 0;
  bool draws_given = false;
  int bins = 0;
  std::uint64_t seed = 1;
  std::string grid = "101";
  std::string out = "-";
  Format format = Format::kCsv;
  bool format_given = false;
  int threads = 1;
  double tolerance = 1e-10;
  double eps_ts = 1e-3;
  double threshold = 1e-3;
  int analytic_k = 0;
  bool with_g = false;
  std::vector<double> weights;
  /// The command line as typed, echoed into output metadata.
  std::string command_line;
};

/// Parses `args` (args[0] is the program name) and runs the subcommand.
/// Results go to the --out file, or to `out` when it is "-"; diagnostics go
/// to `err`. Returns one of ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "G" or "G1xG2" into per-axis point counts.
std::pair<int, int> parse_grid(const std::string& text);

/// Midpoints (i + 0.5) / count, i = 0 .. count-1.
std::vector<double> midpoint_grid(int count);

/// %.17g, with inf/nan spelled out.
std::string format_number(double x);

}  // namespace projstat::cli
