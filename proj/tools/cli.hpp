/*
   Copyright 2026 The rookoid Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// The rookoid command line: enumerate, decompose, verify, selftest.
//
// Exit codes: 0 pass, 1 a verification verdict failed, 2 usage, bounds or
// schema error, 3 numeric degeneracy.

#ifndef ROOKOID_TOOLS_CLI_HPP
#define ROOKOID_TOOLS_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "rookoid/wa_decomposition.hpp"

namespace rookoid::cli {

  enum ExitCode : int {
    kExitPass       = 0,
    kExitVerifyFail = 1,
    kExitUsage      = 2,
    kExitNumeric    = 3,
  };

  inline constexpr std::uint32_t kMaxN = 6;
  inline constexpr std::uint32_t kMaxR = 6;

  struct CliConfig {
    std::string                  command;
    std::uint32_t                n = 0;
    std::uint32_t                r = 0;
    std::optional<std::uint32_t> k;
    std::uint64_t                seed = 42;
    std::optional<double>        tolerance;  // default 1e-9, or the report's for verify
    std::string                  format = "json";  // json | text
    std::string                  out;              // empty: standard output
    std::string                  input;            // report file for verify
    std::uint64_t                max_elements = kMaxGroupOrder;
  };

  //! Parses args (without the program name) and dispatches. The cap is read
  //! from ROOKOID_MAX_ELEMENTS when set.
  int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

  int cmd_enumerate(CliConfig const& cfg, std::ostream& out, std::ostream& err);
  int cmd_decompose(CliConfig const& cfg, std::ostream& out, std::ostream& err);
  int cmd_verify(CliConfig const& cfg, std::ostream& out, std::ostream& err);
  int cmd_selftest(CliConfig const& cfg, std::ostream& out, std::ostream& err);

  //! Per-rank table k, binom(n,k), r^k k!, D_i, sum D_i^2 and the verdicts.
  std::string text_summary(DecompositionReport const& rep);

}  // namespace rookoid::cli

#endif  // ROOKOID_TOOLS_CLI_HPP
