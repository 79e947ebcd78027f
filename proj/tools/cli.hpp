// Copyright 2026 The framesolve Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//  http://www.apache.org/licenses/LICENSE-2.0
//
// THIS CODE IS PROVIDED *AS IS* BASIS, WITHOUT WARRANTIES OR CONDITIONS OF ANY
// KIND, EITHER EXPRESS OR IMPLIED, INCLUDING WITHOUT LIMITATION ANY IMPLIED
// WARRANTIES OR CONDITIONS OF TITLE, FITNESS FOR A PARTICULAR PURPOSE,
// MERCHANTABLITY OR NON-INFRINGEMENT.
// See the Apache 2 License for the specific language governing permissions and
// limitations under the License.

#ifndef FRAMESOLVE_TOOLS_CLI_HPP_
#define FRAMESOLVE_TOOLS_CLI_HPP_

#include <ostream>
#include <string>
#include <vector>

namespace framesolve::cli {

enum ExitCode : int {
  kOk = 0,
  kInputFailure = 1,  // I/O, parse or schema errors
  kInfeasible = 2,
  kViolations = 3,    // sweep violations or a failed self-certificate
};

/// Runs `framesolve` with `args` (program name excluded). Reports go to `out`
/// unless --out is given; diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace framesolve::cli

#endif  // FRAMESOLVE_TOOLS_CLI_HPP_
