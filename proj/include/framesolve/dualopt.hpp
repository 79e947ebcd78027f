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

#ifndef FRAMESOLVE_DUALOPT_HPP_
#define FRAMESOLVE_DUALOPT_HPP_

#include <cstdint>
#include <map>
#include <string>

#include "framesolve/frame.hpp"
#include "framesolve/waterfill.hpp"

namespace framesolve {

/// Duals G of F with sum ||g_j||^2 >= t and ||T_G - T_{F#}|| <= eps.
///
/// `eps` is the frame-level operator-norm radius. The frame operators of the
/// admissible duals are S_{F#} + B with ||B|| <= eps^2, so every matrix-level
/// quantity below uses eps^2.
struct DualRestriction {
  double t = 0.0;
  double eps = 0.0;

  double eps_squared() const { return eps * eps; }
};

/// m = 2d - n; admissible bumps B have rank at most d - m = n - d.
inline int dual_support_offset(const Frame& f) { return static_cast<int>(2 * f.dim() - f.size()); }

struct OptimalDualResult {
  Frame dual;                // G0 = {f#_i + k_i}
  Frame perturbation_frame;  // K with T_K = A
  HermitianMatrix bump;      // B = A^* A = S_K
  Spectrum rho;              // optimal water-fill of lambda(S_{F#}) with cap eps^2, unsorted
  Spectrum rho_desc;         // lambda(S_{G0})
  int m = 0;
  std::map<std::string, double> lower_bounds;  // h name -> sum h(rho_i)
};

struct DualCertificate {
  bool in_set = false;            // dual, norm-sum floor, distance cap
  bool spectrum_optimal = false;  // lambda(S_G) = rho desc
  bool structure = false;         // S_{F#}, S_K jointly diagonal with the optimal pairing
  double dual_residual = 0.0;
  double norm_sum = 0.0;
  double distance = 0.0;          // ||T_G - T_{F#}||
  double spectrum_error = 0.0;    // max |lambda_i(S_G) - rho_desc_i|

  bool optimal() const { return in_set && spectrum_optimal && structure; }
};

/// Relative tolerance used for the t and eps^2 feasibility boundary.
inline constexpr double kDualFeasTol = 1e-10;

/// t - tr(S_{F#}) <= min(d - m, d) eps^2 and t >= tr(S_{F#}), up to the slack.
/// Throws RankError when F is not a frame.
bool feasible_dual(const Frame& f, const DualRestriction& r);

/// Human-readable statement of the feasibility bound for F and r.
std::string dual_feasibility_bound(const Frame& f, const DualRestriction& r);

/// Whether s_candidate = S_{F#} + B with B >= 0, tr B >= t - t0, ||B|| <= eps^2
/// and rank B <= d - m.
bool model_membership(const Frame& f, const HermitianMatrix& s_candidate, const DualRestriction& r,
                      double tol = 1e-9);

/// lambda of the optimal dual's frame operator (nonincreasing).
Spectrum optimal_spectrum(const Frame& f, const DualRestriction& r);

/// Builds the optimal dual by placing the optimal increments on the
/// eigenvectors of S_{F#} and factoring the bump through ker T_F^*.
OptimalDualResult construct_optimal_dual(const Frame& f, const DualRestriction& r);

DualCertificate certify_optimal_dual(const Frame& f, const Frame& g, const DualRestriction& r,
                                     double tol = 1e-8);

/// sum_i h(rho_i).
double potential_lower_bound(const Frame& f, const DualRestriction& r, const ScalarFunction& h);

/// A random member of the admissible dual set (random eigenbasis and levels
/// for B, random kernel directions).
Frame sample_random_dual(const Frame& f, const DualRestriction& r, std::uint64_t seed);

/// The dual {f#_i + k_i} with S_K = B, for B >= 0 of rank at most n - d.
Frame dual_from_bump(const Frame& f, const HermitianMatrix& bump);

}  // namespace framesolve

#endif  // FRAMESOLVE_DUALOPT_HPP_
