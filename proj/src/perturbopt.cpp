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

#include "framesolve/perturbopt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "framesolve/random.hpp"

namespace framesolve {

namespace {

constexpr double kFeasRelTol = 1e-10;

Spectrum log_spectrum(const HermitianMatrix& s) {
  const Spectrum lambda = eigenvalues(s);
  if (!(lambda.min() > 0.0)) throw DomainError("S must be positive definite");
  return log(lambda);
}

CMatrix diagonal_in_basis(const CMatrix& basis, const RVector& values) {
  return basis * values.cast<Complex>().asDiagonal() * basis.adjoint();
}

// Shared by the bounded and expansive constructions: sqrt(mu_i / lambda_i)
// on the decreasing eigenbasis of S.
CMatrix positive_matching(const EigenSystem<Complex>& es, const Spectrum& mu) {
  RVector scale(mu.size());
  for (Index i = 0; i < mu.size(); ++i) scale(i) = std::sqrt(mu[i] / es.values[i]);
  return diagonal_in_basis(es.vectors, scale);
}

Spectrum image_spectrum(const HermitianMatrix& s, const CMatrix& v) {
  return eigenvalues(HermitianMatrix(CMatrix(v * s.matrix() * v.adjoint()), 1e-6));
}

bool structure_matches(const HermitianMatrix& s, const CMatrix& v, const Spectrum& mu, double tol) {
  const Spectrum lambda = eigenvalues(s);
  RVector ratio(mu.size());
  for (Index i = 0; i < mu.size(); ++i) ratio(i) = mu[i] / lambda[i];
  const HermitianMatrix vv = gram(v);
  return commutes(s, vv, tol) && joint_spectrum_matches(s, vv, Spectrum(ratio), std::max(tol, 1e-9));
}

CMatrix random_with_gram_spectrum(const RVector& g, Rng& rng) {
  const Index d = g.size();
  const CMatrix u1 = random_unitary(d, rng);
  const CMatrix u2 = random_unitary(d, rng);
  return u1 * g.cwiseSqrt().cast<Complex>().asDiagonal() * u2;
}

}  // namespace

void validate(const PerturbRestriction& r) {
  if (!(r.s > 0.0) || !std::isfinite(r.s)) throw ParameterError("PerturbRestriction: s must be positive");
  if (!(r.delta > 0.0 && r.delta < 1.0)) throw ParameterError("PerturbRestriction: delta must lie in (0, 1)");
}

bool feasible_perturb(Index d, const PerturbRestriction& r) {
  validate(r);
  const double dd = static_cast<double>(d);
  const double log_s = std::log(r.s);
  const double lo = dd * std::log1p(-r.delta);
  const double hi = dd * std::log1p(r.delta);
  const double slack = kFeasRelTol * std::max(1.0, hi - lo);
  return log_s >= lo - slack && log_s <= hi + slack;
}

std::string perturb_feasibility_bound(Index d, const PerturbRestriction& r) {
  std::ostringstream os;
  os.precision(17);
  os << "need (1 - delta)^d = " << std::pow(1.0 - r.delta, static_cast<double>(d)) << " <= s = " << r.s
     << " <= (1 + delta)^d = " << std::pow(1.0 + r.delta, static_cast<double>(d)) << " (d = " << d
     << ", delta = " << r.delta << ")";
  return os.str();
}

double gram_det(const CMatrix& v) {
  const Spectrum g = eigenvalues(gram(v));
  if (!(g.min() > 0.0)) return 0.0;
  return std::exp(log(g).trace());
}

MuSpectrum mu_spectrum(const HermitianMatrix& s, const PerturbRestriction& r) {
  validate(r);
  const Index d = s.dim();
  const Spectrum lambda_log = log_spectrum(s);
  if (!feasible_perturb(d, r)) throw InfeasibleError("mu_spectrum: " + perturb_feasibility_bound(d, r));
  LogWaterfillData data;
  data.lambda_log = lambda_log;
  data.eps_log = std::log1p(r.delta) - std::log1p(-r.delta);
  data.t_log = std::log(r.s) + lambda_log.trace() - static_cast<double>(d) * std::log1p(-r.delta);
  // Pin t into the feasible box so the boundary slack never reaches rho_zero.
  data.t_log = std::clamp(data.t_log, lambda_log.trace(),
                          lambda_log.trace() + static_cast<double>(d) * data.eps_log);
  data.rho_log = rho_zero(lambda_log, data.t_log, data.eps_log).rho;
  return {scaled(exp(data.rho_log), 1.0 - r.delta), data};
}

OptimalPerturbResult construct_optimal_V(const HermitianMatrix& s, const PerturbRestriction& r) {
  const MuSpectrum ms = mu_spectrum(s, r);
  return {positive_matching(eigh(s), ms.mu), ms.mu, ms.log_data};
}

bool membership_perturb(const CMatrix& v, const PerturbRestriction& r, double tol) {
  validate(r);
  if (v.rows() != v.cols() || v.rows() == 0) return false;
  const Index d = v.rows();
  const RVector sv = singular_values(v);
  if (!(sv(d - 1) > 1e-12 * sv(0))) return false;
  const CMatrix vv = v.adjoint() * v;
  if (op_norm(CMatrix(vv - CMatrix::Identity(d, d))) > r.delta + tol) return false;
  return gram_det(v) >= r.s - tol * std::max(1.0, r.s);
}

double partial_product_slack(const HermitianMatrix& s, const CMatrix& v, const PerturbRestriction& r,
                             double tol) {
  if (!membership_perturb(v, r, tol)) {
    throw PreconditionError("partial_product_slack: V is not admissible for (s, delta)");
  }
  const Spectrum mu = mu_spectrum(s, r).mu;
  const Spectrum got = image_spectrum(s, v);
  const RVector log_mu = log(mu).values();
  const RVector log_got = log(got).values();
  double worst = std::numeric_limits<double>::infinity();
  double acc = 0.0;
  for (Index k = 0; k < mu.size(); ++k) {
    acc += log_got(k) - log_mu(k);
    worst = std::min(worst, acc);
  }
  return worst;
}

bool partial_product_check(const HermitianMatrix& s, const CMatrix& v, const PerturbRestriction& r,
                           double tol) {
  return partial_product_slack(s, v, r, std::max(tol, 1e-9)) >= -tol;
}

PerturbCertificate certify_optimal_perturb(const HermitianMatrix& s, const CMatrix& v,
                                           const PerturbRestriction& r, double tol) {
  if (!membership_perturb(v, r, tol)) {
    throw PreconditionError("certify_optimal_perturb: V is not admissible for (s, delta)");
  }
  const Spectrum mu = mu_spectrum(s, r).mu;
  PerturbCertificate cert;
  cert.spectrum_error = max_abs_diff(image_spectrum(s, v), mu);
  cert.spectrum_match = cert.spectrum_error <= tol * std::max(1.0, mu.max());
  cert.det_value = gram_det(v);
  cert.det_tight = std::abs(cert.det_value - r.s) <= tol * r.s;
  cert.structure = structure_matches(s, v, mu, tol);
  return cert;
}

double perturb_potential_bound(const HermitianMatrix& s, const PerturbRestriction& r,
                               const ScalarFunction& h) {
  return h.trace(mu_spectrum(s, r).mu);
}

FixedGammaBound fixed_gamma_bound(const HermitianMatrix& s, const Spectrum& gamma,
                                  const ScalarFunction& h) {
  detail::require_same_size(s.dim(), gamma.size(), "fixed_gamma_bound");
  if (!(gamma.min() > 0.0)) throw DomainError("fixed_gamma_bound: gamma must be positive");
  const EigenSystem<Complex> es = eigh(s);
  const Spectrum up = gamma.asc();
  const Index d = s.dim();
  RVector products(d);
  for (Index i = 0; i < d; ++i) products(i) = es.values[i] * up[i];
  FixedGammaBound out;
  out.bound = h.trace(Spectrum(products));
  out.V = diagonal_in_basis(es.vectors, up.values().cwiseSqrt());
  return out;
}

Spectrum mu_expansive(const HermitianMatrix& s, double det_floor) {
  if (!(det_floor > 1.0) || !std::isfinite(det_floor)) {
    throw ParameterError("mu_expansive: need s > 1");
  }
  const Spectrum lambda_log = log_spectrum(s);
  return exp(nu(lambda_log, std::log(det_floor) + lambda_log.trace()));
}

CMatrix construct_expansive_V(const HermitianMatrix& s, double det_floor) {
  return positive_matching(eigh(s), mu_expansive(s, det_floor));
}

ExpansiveCertificate certify_expansive(const HermitianMatrix& s, const CMatrix& v, double det_floor,
                                       double tol) {
  const Spectrum mu = mu_expansive(s, det_floor);
  detail::require_same_size(s.dim(), v.rows(), "certify_expansive");
  const Spectrum g = eigenvalues(gram(v));
  if (g.min() < 1.0 - tol) throw PreconditionError("certify_expansive: V^*V is not >= I");
  if (std::abs(gram_det(v) - det_floor) > tol * det_floor) {
    throw PreconditionError("certify_expansive: det(V^*V) != s");
  }
  const Spectrum got = image_spectrum(s, v);
  ExpansiveCertificate cert;
  cert.log_dominance = log_majorizes(mu, got, OrderTolerance(tol));
  cert.spectrum_error = max_abs_diff(got, mu);
  cert.equality = cert.spectrum_error <= tol * std::max(1.0, mu.max());
  cert.structure = structure_matches(s, v, mu, tol);
  return cert;
}

CMatrix sample_random_perturbation(const HermitianMatrix& s, const PerturbRestriction& r,
                                   std::uint64_t seed) {
  validate(r);
  const Index d = s.dim();
  if (!feasible_perturb(d, r)) {
    throw InfeasibleError("sample_random_perturbation: " + perturb_feasibility_bound(d, r));
  }
  Rng rng(seed);
  const double lo = std::log1p(-r.delta);
  const double hi = std::log1p(r.delta);
  const double target = std::min(std::log(r.s), static_cast<double>(d) * hi);
  RVector log_g(d);
  for (Index i = 0; i < d; ++i) log_g(i) = uniform(rng, lo, hi);
  if (log_g.sum() < target) {
    // Move every entry toward the upper end by the same fraction.
    const double room = static_cast<double>(d) * hi - log_g.sum();
    const double alpha = std::min(1.0, (target - log_g.sum()) / room);
    log_g.array() += alpha * (hi - log_g.array());
  }
  return random_with_gram_spectrum(log_g.array().exp().matrix(), rng);
}

CMatrix sample_random_expansive(Index d, double det_floor, std::uint64_t seed) {
  if (!(det_floor >= 1.0)) throw ParameterError("sample_random_expansive: need s >= 1");
  if (d < 1) throw ParameterError("sample_random_expansive: need d >= 1");
  Rng rng(seed);
  RVector w(d);
  for (Index i = 0; i < d; ++i) w(i) = -std::log(uniform(rng, 1e-12, 1.0));
  const RVector log_g = std::log(det_floor) * w / w.sum();
  return random_with_gram_spectrum(log_g.array().exp().matrix(), rng);
}

}  // namespace framesolve
