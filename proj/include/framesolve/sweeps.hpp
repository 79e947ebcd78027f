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

#ifndef FRAMESOLVE_SWEEPS_HPP_
#define FRAMESOLVE_SWEEPS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "framesolve/common.hpp"

namespace framesolve {

/// Tally for one property over a sweep. A violation is an evaluation whose
/// slack fell below -tol.
struct SweepCheck {
  std::string name;
  double tol = 0.0;
  long evaluated = 0;
  long violations = 0;
  double worst_slack = 0.0;
  long ties = 0;  // accidental ties logged by the rigidity checks

  void record(double slack);
  void record_pass(bool ok);
};

struct SweepConfig {
  int trials = 100;
  int dmax = 4;
  std::uint64_t seed = 0;
  int samples = 0;          // inner samples per trial; 0 selects the suite default
  double tol = 0.0;         // 0 selects the suite default
  double log_tol = 0.0;     // 0 selects the suite default
};

struct SweepReport {
  std::string suite;
  SweepConfig config;
  std::vector<SweepCheck> checks;

  long total_violations() const;
  const SweepCheck& check(const std::string& name) const;
};

/// Random feasible water-fill problems against the sampled feasible set.
SweepReport waterfill_sweep(const SweepConfig& config);

/// Random frames and restrictions against sampled admissible duals.
SweepReport dual_sweep(const SweepConfig& config);

/// Random (S, s, delta) against sampled admissible V, plus the expansive variant.
SweepReport perturb_sweep(const SweepConfig& config);

/// Eigenvalue inequalities on random instances and equality-case rigidity on
/// constructed ones.
SweepReport lidskii_sweep(const SweepConfig& config);

/// Dispatch on "waterfill", "dual", "perturb" or "lidskii". Throws
/// ParameterError for any other name.
SweepReport run_sweep(const std::string& suite, const SweepConfig& config);

}  // namespace framesolve

#endif  // FRAMESOLVE_SWEEPS_HPP_
