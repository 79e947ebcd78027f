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

#ifndef FRAMESOLVE_LIDSKII_HPP_
#define FRAMESOLVE_LIDSKII_HPP_

#include <vector>

#include "framesolve/hermitian.hpp"

namespace framesolve {

/// Slack on sums of logarithms used by every multiplicative comparison here.
inline constexpr double kLogTol = 1e-8;

/// Indices are 0-based throughout this header.
struct InequalityReport {
  bool holds = true;
  double worst_slack = 0.0;  // min over the tested indices of rhs - lhs
  std::vector<std::vector<Index>> equality_indices;
};

struct WeylReport {
  InequalityReport inequality;
  // One entry per equality index: a common unit eigenvector (Ax = lambda_i(A) x,
  // Bx = lambda_1(B) x) or an empty vector when none was found.
  std::vector<CVector> witnesses;
  bool witnesses_found = true;
};

/// lambda_i(A + B) <= lambda_i(A) + lambda_1(B) for every i. The slack is
/// scaled by max(1, ||A|| + ||B||).
WeylReport weyl_check(const HermitianMatrix& a, const HermitianMatrix& b, double tol = 1e-8);

struct OstrowskiReport {
  InequalityReport inequality;
  // For every positive eigenvalue of S hit with equality, the eigenspace of S
  // meets the fixed space of |V^*| in at least as many dimensions as there are
  // equality indices at that eigenvalue.
  bool witnesses_found = true;
};

/// lambda_i(S) <= lambda_i(V^*SV) for S >= 0 and V^*V >= I. Throws
/// PreconditionError when lambda_min(V^*V) < 1 - tol.
OstrowskiReport ostrowski_check(const HermitianMatrix& s, const CMatrix& v, double tol = 1e-8);

struct LiMathiasReport {
  InequalityReport inequality;  // slack in the log domain
  double lower_slack = 0.0;     // middle - lower
  double upper_slack = 0.0;     // upper - middle
  bool lower_tight = false;
  bool upper_tight = false;
};

/// prod_{i<=k} gamma_{d+1-i} <= prod_{i in J} lambda_i(V^*SV) / lambda_i(S) <= prod_{i<=k} gamma_i
/// with gamma = lambda(V^*V), k = |J|. Throws DomainError when lambda_i(S) = 0
/// for some i in J.
LiMathiasReport li_mathias_check(const HermitianMatrix& s, const CMatrix& v,
                                 const std::vector<Index>& subset, double tol = kLogTol);

struct SandwichReport {
  InequalityReport lower;  // lambda(S) o gamma^asc <_log lambda(V^*SV)
  InequalityReport upper;  // lambda(V^*SV) <_log lambda(S) o gamma

  bool holds() const { return lower.holds && upper.holds; }
  double worst_slack() const { return std::min(lower.worst_slack, upper.worst_slack); }
};

/// Both log-majorizations of the multiplicative Lidskii inequality, with
/// gamma = lambda(V^*V). Slacks are on sums of logarithms; the k = d term
/// enters as -|difference|.
SandwichReport mult_lidskii_sandwich(const HermitianMatrix& s, const CMatrix& v, double tol = kLogTol);

enum class Side { kLower, kUpper };

struct EqualityCertificate {
  bool equality = false;  // lambda(V^*SV) equals the extreme of the side
  bool commutes = false;  // S and |V^*| commute
  bool pairing = false;   // joint spectra realize the anti-aligned / aligned pairing
  double max_partial_gap = 0.0;  // max_k |log partial product difference|

  bool certified() const { return equality && commutes && pairing; }
};

EqualityCertificate equality_case_check(const HermitianMatrix& s, const CMatrix& v, Side side,
                                        double tol = kLogTol);

/// An operator V with |V^*| = sum_i gamma_{pi(i)}^{1/2} v_i (x) v_i in the
/// decreasing eigenbasis of S, where pi pairs the largest lambda_i(S) with the
/// smallest (lower) or largest (upper) gamma, followed by the unitary factor.
CMatrix matched_operator(const HermitianMatrix& s, const Spectrum& gamma, Side side,
                         const CMatrix& unitary);

struct MatchingReport {
  bool is_umm = false;
  bool is_lmm = false;
  std::vector<Index> umm_chain;  // chain order: J_k = first k entries
  std::vector<Index> lmm_chain;
};

inline constexpr Index kMaxMatchingDim = 10;

/// Exhaustive nested-chain search for upper/lower multiplicative matchings.
/// Throws ParameterError when d > kMaxMatchingDim.
MatchingReport umm_detect(const HermitianMatrix& s, const CMatrix& v, double tol = kLogTol);

/// UMM or LMM implies that S and |V^*| commute. Returns whether the
/// implication holds on this input.
bool umm_implies_commute(const HermitianMatrix& s, const CMatrix& v, double tol = kLogTol,
                         double commute_tol = 1e-6);

/// lambda(A) + lambda^asc(B) is majorized by lambda(A + B).
InequalityReport additive_lidskii_check(const HermitianMatrix& a, const HermitianMatrix& b,
                                        double tol = 1e-8);

}  // namespace framesolve

#endif  // FRAMESOLVE_LIDSKII_HPP_
