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

#include "framesolve/lidskii.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace framesolve {

namespace {

// Report for "x majorized by y": partial sums of the decreasing rearrangements
// for k < d, and -|difference| of the totals at k = d.
InequalityReport majorization_report(const Spectrum& x, const Spectrum& y, double tol) {
  detail::require_same_size(x.size(), y.size(), "majorization_report");
  const RVector xs = x.desc().partial_sums();
  const RVector ys = y.desc().partial_sums();
  const Index d = xs.size();
  InequalityReport report;
  report.worst_slack = std::numeric_limits<double>::infinity();
  for (Index k = 0; k < d; ++k) {
    const double slack = k + 1 < d ? ys(k) - xs(k) : -std::abs(ys(k) - xs(k));
    report.worst_slack = std::min(report.worst_slack, slack);
    if (std::abs(ys(k) - xs(k)) <= tol) report.equality_indices.push_back({k});
  }
  report.holds = report.worst_slack >= -tol;
  return report;
}

Spectrum congruence_spectrum(const HermitianMatrix& s, const CMatrix& v) {
  return eigenvalues(congruence(s, v));
}

Spectrum gram_spectrum(const CMatrix& v) { return eigenvalues(gram(v)); }

void require_square(const HermitianMatrix& s, const CMatrix& v, const char* what) {
  if (v.rows() != v.cols()) throw DimensionError(std::string(what) + ": V must be square");
  detail::require_same_size(s.dim(), v.rows(), what);
}

void require_invertible(const CMatrix& v, const char* what) {
  const RVector sv = singular_values(v);
  if (!(sv(sv.size() - 1) > 1e-12 * sv(0))) throw InputError(std::string(what) + ": V is singular");
}

// lambda(S) o gamma^asc (lower) or lambda(S) o gamma (upper), both sides
// sorted decreasingly on input.
Spectrum extreme_product(const Spectrum& lambda, const Spectrum& gamma, Side side) {
  const Spectrum g = side == Side::kLower ? gamma.asc() : gamma.desc();
  return hadamard(lambda, g);
}

// Pairs gamma with the decreasing eigenbasis of S as dictated by the side.
Spectrum paired_gamma(const Spectrum& gamma, Side side) {
  return side == Side::kLower ? gamma.asc() : gamma.desc();
}

struct ChainSearch {
  RVector ratio;    // log lambda_i(V^*SV) - log lambda_i(S)
  RVector target;   // cumulative target for each level
  double tol;
  std::vector<char> dead;
  std::vector<Index> chain;

  bool run(unsigned mask, double acc, Index level) {
    const Index d = ratio.size();
    if (level == d) return true;
    if (dead[mask]) return false;
    for (Index i = 0; i < d; ++i) {
      if (mask & (1u << i)) continue;
      const double next = acc + ratio(i);
      if (std::abs(next - target(level)) > tol) continue;
      chain.push_back(i);
      if (run(mask | (1u << i), next, level + 1)) return true;
      chain.pop_back();
    }
    dead[mask] = 1;
    return false;
  }
};

}  // namespace

WeylReport weyl_check(const HermitianMatrix& a, const HermitianMatrix& b, double tol) {
  detail::require_same_size(a.dim(), b.dim(), "weyl_check");
  const EigenSystem<Complex> ea = eigh(a);
  const EigenSystem<Complex> eb = eigh(b);
  const Spectrum sum = eigenvalues(a + b);
  const double scale = std::max(1.0, op_norm(a) + op_norm(b));
  const double top_b = eb.values[0];
  const CMatrix top_space = eigenspace(eb, top_b, 1e-8);

  WeylReport out;
  out.inequality.worst_slack = std::numeric_limits<double>::infinity();
  for (Index i = 0; i < a.dim(); ++i) {
    const double slack = ea.values[i] + top_b - sum[i];
    out.inequality.worst_slack = std::min(out.inequality.worst_slack, slack);
    if (std::abs(slack) > tol * scale) continue;
    out.inequality.equality_indices.push_back({i});
    const CMatrix common = subspace_intersection(eigenspace(ea, ea.values[i], 1e-8), top_space);
    if (common.cols() > 0) {
      out.witnesses.push_back(common.col(0));
    } else {
      out.witnesses.emplace_back();
      out.witnesses_found = false;
    }
  }
  out.inequality.holds = out.inequality.worst_slack >= -tol * scale;
  return out;
}

OstrowskiReport ostrowski_check(const HermitianMatrix& s, const CMatrix& v, double tol) {
  require_square(s, v, "ostrowski_check");
  if (gram_spectrum(v).min() < 1.0 - tol) {
    throw PreconditionError("ostrowski_check: V^*V is not >= I");
  }
  const EigenSystem<Complex> es = eigh(s);
  const Spectrum image = congruence_spectrum(s, v);
  const double scale = std::max(1.0, image.max());

  OstrowskiReport out;
  out.inequality.worst_slack = std::numeric_limits<double>::infinity();
  std::vector<char> tight(static_cast<size_t>(s.dim()), 0);
  for (Index i = 0; i < s.dim(); ++i) {
    const double slack = image[i] - es.values[i];
    out.inequality.worst_slack = std::min(out.inequality.worst_slack, slack);
    if (std::abs(slack) <= tol * scale) {
      out.inequality.equality_indices.push_back({i});
      tight[static_cast<size_t>(i)] = 1;
    }
  }
  out.inequality.holds = out.inequality.worst_slack >= -tol * scale;

  // Witnesses: S-eigenspace meets Fix|V^*| with enough room for the equality
  // indices of that eigenvalue. Zero eigenvalues carry no such constraint.
  const CMatrix fixed = eigenspace(eigh(abs_star(v)), 1.0, 1e-6);
  for (const auto& cluster : eigen_clusters(es.values, 1e-8)) {
    const double value = es.values[cluster.front()];
    if (value <= tol * scale) continue;
    Index needed = 0;
    for (Index i : cluster) needed += tight[static_cast<size_t>(i)];
    if (needed == 0) continue;
    const CMatrix common = subspace_intersection(eigenspace(es, value, 1e-8), fixed);
    if (common.cols() < needed) out.witnesses_found = false;
  }
  return out;
}

LiMathiasReport li_mathias_check(const HermitianMatrix& s, const CMatrix& v,
                                 const std::vector<Index>& subset, double tol) {
  require_square(s, v, "li_mathias_check");
  require_invertible(v, "li_mathias_check");
  const Index d = s.dim();
  const Spectrum lambda = eigenvalues(s);
  const Spectrum image = congruence_spectrum(s, v);
  const RVector gamma_log = log(gram_spectrum(v)).values();
  const Index k = static_cast<Index>(subset.size());
  if (k > d) throw DimensionError("li_mathias_check: |J| > d");

  double middle = 0.0;
  for (Index i : subset) {
    if (i < 0 || i >= d) throw DimensionError("li_mathias_check: index out of range");
    if (!(lambda[i] > 0.0)) throw DomainError("li_mathias_check: lambda_i(S) = 0 for i in J");
    middle += std::log(image[i]) - std::log(lambda[i]);
  }
  const double lower = gamma_log.tail(k).sum();
  const double upper = gamma_log.head(k).sum();

  LiMathiasReport out;
  out.lower_slack = middle - lower;
  out.upper_slack = upper - middle;
  out.inequality.worst_slack = std::min(out.lower_slack, out.upper_slack);
  out.inequality.holds = out.inequality.worst_slack >= -tol;
  out.lower_tight = std::abs(middle - lower) <= tol;
  out.upper_tight = std::abs(upper - middle) <= tol;
  if (out.lower_tight || out.upper_tight) out.inequality.equality_indices.push_back(subset);
  return out;
}

SandwichReport mult_lidskii_sandwich(const HermitianMatrix& s, const CMatrix& v, double tol) {
  require_square(s, v, "mult_lidskii_sandwich");
  require_invertible(v, "mult_lidskii_sandwich");
  const Spectrum lambda = eigenvalues(s);
  if (!(lambda.min() > 0.0)) throw DomainError("mult_lidskii_sandwich: S must be positive definite");
  const Spectrum gamma = gram_spectrum(v);
  const Spectrum image_log = log(congruence_spectrum(s, v));
  SandwichReport out;
  out.lower = majorization_report(log(extreme_product(lambda, gamma, Side::kLower)), image_log, tol);
  out.upper = majorization_report(image_log, log(extreme_product(lambda, gamma, Side::kUpper)), tol);
  return out;
}

EqualityCertificate equality_case_check(const HermitianMatrix& s, const CMatrix& v, Side side,
                                        double tol) {
  require_square(s, v, "equality_case_check");
  require_invertible(v, "equality_case_check");
  const Spectrum lambda = eigenvalues(s);
  if (!(lambda.min() > 0.0)) throw DomainError("equality_case_check: S must be positive definite");
  const Spectrum gamma = gram_spectrum(v);
  const RVector got = log(congruence_spectrum(s, v)).partial_sums();
  const RVector want = log(extreme_product(lambda, gamma, side).desc()).partial_sums();

  EqualityCertificate cert;
  cert.max_partial_gap = (got - want).cwiseAbs().maxCoeff();
  cert.equality = cert.max_partial_gap <= tol;
  const HermitianMatrix modulus = abs_star(v);
  cert.commutes = commutes(s, modulus, tol);
  const Spectrum expected = Spectrum(RVector(paired_gamma(gamma, side).values().cwiseSqrt()));
  cert.pairing = joint_spectrum_matches(s, modulus, expected, std::max(tol, 1e-9));
  return cert;
}

CMatrix matched_operator(const HermitianMatrix& s, const Spectrum& gamma, Side side,
                         const CMatrix& unitary) {
  detail::require_same_size(s.dim(), gamma.size(), "matched_operator");
  if (!(gamma.min() > 0.0)) throw DomainError("matched_operator: gamma must be positive");
  const EigenSystem<Complex> es = eigh(s);
  const RVector root = paired_gamma(gamma, side).values().cwiseSqrt();
  const CMatrix modulus = es.vectors * root.cast<Complex>().asDiagonal() * es.vectors.adjoint();
  // V^* = U |V^*|.
  return modulus * unitary.adjoint();
}

MatchingReport umm_detect(const HermitianMatrix& s, const CMatrix& v, double tol) {
  require_square(s, v, "umm_detect");
  const Index d = s.dim();
  if (d > kMaxMatchingDim) {
    throw ParameterError("umm_detect: d = " + std::to_string(d) + " exceeds the search cap " +
                         std::to_string(kMaxMatchingDim));
  }
  require_invertible(v, "umm_detect");
  const Spectrum lambda = eigenvalues(s);
  if (!(lambda.min() > 0.0)) throw DomainError("umm_detect: S must be positive definite");
  const RVector ratio = log(congruence_spectrum(s, v)).values() - log(lambda).values();
  const Spectrum gamma = gram_spectrum(v);

  MatchingReport out;
  for (Side side : {Side::kUpper, Side::kLower}) {
    ChainSearch search{ratio, log(paired_gamma(gamma, side)).partial_sums(), tol,
                       std::vector<char>(size_t{1} << d, 0), {}};
    const bool found = search.run(0u, 0.0, 0);
    if (side == Side::kUpper) {
      out.is_umm = found;
      if (found) out.umm_chain = search.chain;
    } else {
      out.is_lmm = found;
      if (found) out.lmm_chain = search.chain;
    }
  }
  return out;
}

bool umm_implies_commute(const HermitianMatrix& s, const CMatrix& v, double tol, double commute_tol) {
  const MatchingReport m = umm_detect(s, v, tol);
  if (!m.is_umm && !m.is_lmm) return true;
  return commutes(s, abs_star(v), commute_tol);
}

InequalityReport additive_lidskii_check(const HermitianMatrix& a, const HermitianMatrix& b,
                                        double tol) {
  detail::require_same_size(a.dim(), b.dim(), "additive_lidskii_check");
  const double scale = std::max(1.0, op_norm(a) + op_norm(b));
  const Spectrum lhs = eigenvalues(a) + eigenvalues(b).asc();
  return majorization_report(lhs, eigenvalues(a + b), tol * scale);
}

}  // namespace framesolve
