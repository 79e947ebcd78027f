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

#ifndef FRAMESOLVE_PERTURBOPT_HPP_
#define FRAMESOLVE_PERTURBOPT_HPP_

#include <cstdint>
#include <string>

#include "framesolve/frame.hpp"
#include "framesolve/waterfill.hpp"

namespace framesolve {

/// Operators V with ||V^*V - I|| <= delta and det(V^*V) >= s.
struct PerturbRestriction {
  double s = 1.0;
  double delta = 0.0;
};

/// Throws ParameterError unless s > 0 and 0 < delta < 1.
void validate(const PerturbRestriction& r);

/// (1 - delta)^d <= s <= (1 + delta)^d up to a relative slack.
bool feasible_perturb(Index d, const PerturbRestriction& r);
std::string perturb_feasibility_bound(Index d, const PerturbRestriction& r);

/// The log-domain water-filling problem solved for mu.
struct LogWaterfillData {
  Spectrum lambda_log;  // log lambda(S), nonincreasing
  double t_log = 0.0;   // log(s det S / (1 - delta)^d)
  double eps_log = 0.0; // log((1 + delta) / (1 - delta))
  Spectrum rho_log;
};

struct MuSpectrum {
  Spectrum mu;  // nonincreasing
  LogWaterfillData log_data;
};

struct OptimalPerturbResult {
  CMatrix V0;  // positive, commutes with S
  Spectrum mu;
  LogWaterfillData log_data;
};

struct PerturbCertificate {
  bool spectrum_match = false;  // lambda(V S V^*) = mu
  bool det_tight = false;       // det(V^*V) = s
  bool structure = false;       // S, V^*V jointly diagonal with the mu_i / lambda_i pairing
  double spectrum_error = 0.0;
  double det_value = 0.0;

  bool optimal() const { return spectrum_match && det_tight && structure; }
};

struct ExpansiveCertificate {
  bool log_dominance = false;  // mu <_log lambda(V S V^*)
  bool equality = false;       // lambda(V S V^*) = mu
  bool structure = false;
  double spectrum_error = 0.0;

  bool optimal() const { return equality && structure; }
};

struct FixedGammaBound {
  double bound = 0.0;  // sum_i h(lambda_i(S) gamma_{d+1-i})
  CMatrix V;           // positive, anti-aligned with S, lambda(V^*V) = gamma
};

/// det(V^*V) as exp(sum log lambda_i(V^*V)); zero when V is singular.
double gram_det(const CMatrix& v);

/// mu = (1 - delta) exp(rho_zero(log lambda(S), t, eps)).
/// Throws DomainError when S is not positive definite and InfeasibleError
/// when s is outside [(1 - delta)^d, (1 + delta)^d].
MuSpectrum mu_spectrum(const HermitianMatrix& s, const PerturbRestriction& r);

/// V0 = sum_i (mu_i / lambda_i(S))^{1/2} v_i (x) v_i in the eigenbasis of S.
OptimalPerturbResult construct_optimal_V(const HermitianMatrix& s, const PerturbRestriction& r);

/// V invertible, ||V^*V - I|| <= delta + tol and det(V^*V) >= s - tol max(1, s).
bool membership_perturb(const CMatrix& v, const PerturbRestriction& r, double tol = 1e-9);

/// min_k of sum_{i<=k} log lambda_i(V S V^*) - sum_{i<=k} log mu_i.
/// Throws PreconditionError when V is not admissible.
double partial_product_slack(const HermitianMatrix& s, const CMatrix& v, const PerturbRestriction& r,
                             double tol = 1e-9);

/// Whether prod_{i<=k} mu_i <= prod_{i<=k} lambda_i(V S V^*) e^tol for every k.
bool partial_product_check(const HermitianMatrix& s, const CMatrix& v, const PerturbRestriction& r,
                           double tol = 1e-8);

PerturbCertificate certify_optimal_perturb(const HermitianMatrix& s, const CMatrix& v,
                                           const PerturbRestriction& r, double tol = 1e-8);

/// sum_i h(mu_i), the lower bound for P_h(V . F) over admissible V.
double perturb_potential_bound(const HermitianMatrix& s, const PerturbRestriction& r,
                               const ScalarFunction& h);

/// Lower bound for P_h(V . F) over V with lambda(V^*V) = gamma, and a V
/// attaining it. gamma must be positive; it is sorted internally.
FixedGammaBound fixed_gamma_bound(const HermitianMatrix& s, const Spectrum& gamma,
                                  const ScalarFunction& h);

/// mu = exp(nu(log lambda(S), log s + tr log lambda(S))). Throws
/// ParameterError unless s > 1.
Spectrum mu_expansive(const HermitianMatrix& s, double det_floor);

/// V0 = sum_i (mu_i / lambda_i(S))^{1/2} v_i (x) v_i with mu from mu_expansive.
CMatrix construct_expansive_V(const HermitianMatrix& s, double det_floor);

/// Throws PreconditionError unless V^*V >= I - tol and det(V^*V) = s within
/// relative tol.
ExpansiveCertificate certify_expansive(const HermitianMatrix& s, const CMatrix& v, double det_floor,
                                       double tol = 1e-8);

/// V = U1 diag(g)^{1/2} U2 with g_i in [1 - delta, 1 + delta] and prod g >= s.
CMatrix sample_random_perturbation(const HermitianMatrix& s, const PerturbRestriction& r,
                                   std::uint64_t seed);

/// V = U1 diag(g)^{1/2} U2 with g_i >= 1 and prod g = s.
CMatrix sample_random_expansive(Index d, double det_floor, std::uint64_t seed);

}  // namespace framesolve

#endif  // FRAMESOLVE_PERTURBOPT_HPP_
