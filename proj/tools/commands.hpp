// Copyright 2026 The rayclass Authors.
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

#ifndef RAYCLASS_TOOLS_COMMANDS_HPP_
#define RAYCLASS_TOOLS_COMMANDS_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>

#include "report.hpp"

namespace rayclass::cli {

enum ExitCode : int {
  kExitSuccess = 0,
  kExitVerificationFailure = 1,
  kExitUsage = 2,
  kExitResource = 3,
};

struct ZmArgs {
  std::uint64_t min_m = 2;
  std::uint64_t max_m = 1;
};

struct QuadArgs {
  std::uint64_t min_absdisc = 3;
  std::uint64_t max_absdisc = 2;
  std::int64_t conductor = 1;
};

/// Options shared by every command.
struct RunConfig {
  std::string format = "csv";
  std::string out_path;
  unsigned jobs = 1;
  std::uint64_t sieve_limit = 100'000'000;
  std::uint64_t subgroup_cap = 1'000'000;
  std::string timestamp;  // empty: SOURCE_DATE_EPOCH, else the current time
  bool quiet = false;
};

/// Report of every constant certificate.
Report constants_report(const RunConfig& config);
/// Report of every non-trivial subgroup of (Z/mZ)^x over the range.
Report verify_zm_report(const ZmArgs& args, const RunConfig& config, std::ostream& progress);
/// Report of every imaginary quadratic order over the range.
Report verify_quad_report(const QuadArgs& args, const RunConfig& config, std::ostream& progress);

/// Entry point of the rayclass executable. Data goes to out (or --out),
/// diagnostics and progress to err. Returns an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rayclass::cli

#endif  // RAYCLASS_TOOLS_COMMANDS_HPP_
