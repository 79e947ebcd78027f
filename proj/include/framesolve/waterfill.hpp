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

#ifndef FRAMESOLVE_WATERFILL_HPP_
#define FRAMESOLVE_WATERFILL_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "framesolve/spectrum.hpp"

namespace framesolve {

/// Capped water-filling: minimize, for submajorization, lambda + mu over
/// increments 0 <= mu_i <= eps with tr(mu) >= t - tr(lambda) and at most
/// d - m nonzero increments.
struct WaterfillProblem {
  Spectrum lambda;  // nonincreasing
  double t = 0.0;
  double eps = 0.0;
  int m = 0;

  void validate() const;
};

struct WaterfillResult {
  Spectrum rho;
  Spectrum increments;               // rho - lambda, nondecreasing, in [0, eps]
  std::optional<double> water_level; // level of the final uncapped fill
  int saturated_count = 0;           // entries fixed at lambda_i + eps
};

/// Relative slack used for the feasibility boundary and for clamping tiny
/// negative budgets to zero.
inline constexpr double kWaterfillTol = 1e-10;

/// The unique c with sum_i (c - lambda_i)^+ = t - tr(lambda), found by scanning
/// the breakpoints of the piecewise-linear fill function. lambda may be in any
/// order. Throws InfeasibleError when t < tr(lambda).
double c_level(const Spectrum& lambda, double t);

/// Uncapped fill (lambda_i + (c - lambda_i)^+). lambda must be nonincreasing.
Spectrum nu(const Spectrum& lambda, double t);

/// Capped fill with every entry allowed to move. Requires
/// 0 <= t - tr(lambda) <= d * eps.
WaterfillResult rho_zero(const Spectrum& lambda, double t, double eps);

/// Capped fill with the top m entries frozen (m <= 0 means none are).
/// The result need not be sorted once m > 0.
WaterfillResult rho(const Spectrum& lambda, double t, double eps, int m);
inline WaterfillResult rho(const WaterfillProblem& p) { return rho(p.lambda, p.t, p.eps, p.m); }

/// t >= tr(lambda) and t - tr(lambda) <= min(d - m, d) * eps, both up to the
/// relative slack kWaterfillTol.
bool feasible(const Spectrum& lambda, double t, double eps, int m);

/// Random members lambda + mu of the feasible set (box samples pushed up to the
/// trace floor plus a deterministic grid). Used as an independent oracle.
std::vector<Spectrum> sample_feasible_set(const Spectrum& lambda, double t, double eps, int m,
                                          int samples, std::uint64_t seed);

/// Among sampled members, the one closest to violating rho <_w gamma, i.e. the
/// minimizer of min_k (S_k(gamma) - S_k(rho)).
Spectrum brute_force_min(const Spectrum& lambda, double t, double eps, int m, int samples,
                         std::uint64_t seed);

}  // namespace framesolve

#endif  // FRAMESOLVE_WATERFILL_HPP_
