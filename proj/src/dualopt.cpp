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

#include "framesolve/dualopt.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "framesolve/random.hpp"

namespace framesolve {

namespace {

struct DualData {
  Frame canonical;
  HermitianMatrix s_canonical;
  EigenSystem<Complex> eig;
  double t0 = 0.0;
  int m = 0;
  Index slots = 0;  // min(d - m, d)
};

DualData prepare(const Frame& f) {
  if (!f.is_frame()) throw RankError("dual problem: F is not a frame");
  DualData data{canonical_dual(f), HermitianMatrix(), {}, 0.0, dual_support_offset(f), 0};
  data.s_canonical = frame_operator(data.canonical);
  data.eig = eigh(data.s_canonical);
  data.t0 = data.s_canonical.trace();
  data.slots = std::min<Index>(f.size() - f.dim(), f.dim());
  return data;
}

double feas_tol(double t, double t0) { return kDualFeasTol * std::max({1.0, std::abs(t), t0}); }

void require_restriction(const DualRestriction& r) {
  if (!(r.eps > 0.0) || !std::isfinite(r.eps) || !std::isfinite(r.t)) {
    throw ParameterError("DualRestriction: eps must be positive and t finite");
  }
}

bool is_feasible(const DualData& data, const DualRestriction& r) {
  const double budget = r.t - data.t0;
  const double tol = feas_tol(r.t, data.t0);
  return budget >= -tol && budget <= static_cast<double>(data.slots) * r.eps_squared() + tol;
}

// A = sum_j sqrt(levels_j) u_j q_j^*, mapping C^d into ker T_F^*.
CMatrix factor_through_kernel(const CMatrix& kernel, const RVector& levels, const CMatrix& directions) {
  const Index n = kernel.rows();
  const Index d = directions.rows();
  if (levels.size() > kernel.cols()) {
    throw RankError("bump rank exceeds dim ker T_F^* = " + std::to_string(kernel.cols()));
  }
  CMatrix a = CMatrix::Zero(n, d);
  for (Index j = 0; j < levels.size(); ++j) {
    a += std::sqrt(std::max(levels(j), 0.0)) * kernel.col(j) * directions.col(j).adjoint();
  }
  return a;
}

Frame perturbed_dual(const Frame& canonical, const CMatrix& a) {
  return Frame(CMatrix(canonical.synthesis() + a.adjoint()));
}

WaterfillResult optimal_fill(const DualData& data, const DualRestriction& r) {
  const Index d = data.eig.values.size();
  if (data.m >= d) {
    // No redundancy: F# is the only dual, so only the zero budget is admissible.
    WaterfillResult w;
    w.rho = data.eig.values;
    w.increments = Spectrum(RVector(RVector::Zero(d)));
    w.water_level = data.eig.values.min();
    return w;
  }
  // The boundary slack may leave t a hair outside [t0, t0 + slots eps^2].
  const double t = std::clamp(r.t, data.t0, data.t0 + static_cast<double>(data.slots) * r.eps_squared());
  return rho(data.eig.values, t, r.eps_squared(), data.m);
}

}  // namespace

bool feasible_dual(const Frame& f, const DualRestriction& r) {
  require_restriction(r);
  return is_feasible(prepare(f), r);
}

std::string dual_feasibility_bound(const Frame& f, const DualRestriction& r) {
  const DualData data = prepare(f);
  std::ostringstream os;
  os.precision(17);
  os << "need tr(S_F#) = " << data.t0 << " <= t = " << r.t << " and t - tr(S_F#) = " << (r.t - data.t0)
     << " <= min(d - m, d) * eps^2 = " << data.slots << " * " << r.eps_squared() << " = "
     << static_cast<double>(data.slots) * r.eps_squared() << " (d = " << f.dim() << ", n = " << f.size()
     << ", m = 2d - n = " << data.m << ")";
  return os.str();
}

bool model_membership(const Frame& f, const HermitianMatrix& s_candidate, const DualRestriction& r,
                      double tol) {
  require_restriction(r);
  const DualData data = prepare(f);
  detail::require_same_size(s_candidate.dim(), f.dim(), "model_membership");
  const HermitianMatrix bump = s_candidate - data.s_canonical;
  const Spectrum ev = eigenvalues(bump);
  const double scale = std::max(1.0, op_norm(s_candidate));
  if (ev.min() < -tol * scale) return false;
  if (bump.trace() < r.t - data.t0 - tol * scale) return false;
  if (ev.max() > r.eps_squared() + tol * scale) return false;
  // Rank with the 1e-10 relative cutoff, floored at the rounding noise of the
  // subtraction that produced B.
  const double cutoff = std::max(1e-10 * std::abs(ev.max()),
                                 64.0 * std::numeric_limits<double>::epsilon() * scale);
  const Index rank = (ev.values().array().abs() > cutoff).count();
  return rank <= static_cast<Index>(f.size() - f.dim());
}

Spectrum optimal_spectrum(const Frame& f, const DualRestriction& r) {
  require_restriction(r);
  const DualData data = prepare(f);
  if (!is_feasible(data, r)) {
    throw InfeasibleError("optimal_spectrum: " + dual_feasibility_bound(f, r));
  }
  return optimal_fill(data, r).rho.desc();
}

OptimalDualResult construct_optimal_dual(const Frame& f, const DualRestriction& r) {
  require_restriction(r);
  const DualData data = prepare(f);
  if (!is_feasible(data, r)) {
    throw InfeasibleError("construct_optimal_dual: " + dual_feasibility_bound(f, r));
  }
  const WaterfillResult fill = optimal_fill(data, r);
  const Index d = f.dim();

  // Increments pair with the eigenvectors of S_{F#} in decreasing order, so the
  // largest eigenvalues receive the smallest increments.
  std::vector<Index> support;
  for (Index j = 0; j < d; ++j) {
    if (fill.increments[j] > 0.0) support.push_back(j);
  }
  RVector levels(static_cast<Index>(support.size()));
  CMatrix directions(d, static_cast<Index>(support.size()));
  for (size_t k = 0; k < support.size(); ++k) {
    levels(static_cast<Index>(k)) = fill.increments[support[k]];
    directions.col(static_cast<Index>(k)) = data.eig.vectors.col(support[k]);
  }
  const CMatrix kernel = synthesis_kernel(f);
  const CMatrix a = factor_through_kernel(kernel, levels, directions);

  OptimalDualResult out;
  out.dual = perturbed_dual(data.canonical, a);
  out.perturbation_frame = Frame(CMatrix(a.adjoint()));
  out.bump = HermitianMatrix(CMatrix(a.adjoint() * a));
  out.rho = fill.rho;
  out.rho_desc = fill.rho.desc();
  out.m = data.m;
  std::vector<ScalarFunction> family = increasing_convex_family();
  if (out.rho_desc.min() > 0.0) family.push_back(ScalarFunction::inverse());
  for (const ScalarFunction& h : family) out.lower_bounds[h.name()] = h.trace(out.rho);
  return out;
}

DualCertificate certify_optimal_dual(const Frame& f, const Frame& g, const DualRestriction& r,
                                     double tol) {
  require_restriction(r);
  detail::require_same_size(f.dim(), g.dim(), "certify_optimal_dual (d)");
  detail::require_same_size(f.size(), g.size(), "certify_optimal_dual (n)");
  const DualData data = prepare(f);

  DualCertificate cert;
  const DualPairReport pair = dual_check(f, g, tol);
  cert.dual_residual = pair.residual;
  cert.norm_sum = g.norm_sum();
  const CMatrix diff = g.analysis() - data.canonical.analysis();
  cert.distance = op_norm(diff);
  cert.in_set = pair.is_dual && cert.norm_sum >= r.t - tol * std::max(1.0, std::abs(r.t)) &&
                cert.distance <= r.eps + tol;

  if (!is_feasible(data, r)) return cert;
  const WaterfillResult fill = optimal_fill(data, r);
  const HermitianMatrix s_g = frame_operator(g);
  const Spectrum got = eigenvalues(s_g);
  const Spectrum want = fill.rho.desc();
  cert.spectrum_error = max_abs_diff(got, want);
  cert.spectrum_optimal = cert.spectrum_error <= tol * std::max(1.0, want.max());

  const HermitianMatrix s_k = frame_operator(Frame(CMatrix(diff.adjoint())));
  cert.structure = commutes(data.s_canonical, s_g, tol) &&
                   joint_spectrum_matches(data.s_canonical, s_k, fill.increments, std::max(tol, 1e-9));
  return cert;
}

double potential_lower_bound(const Frame& f, const DualRestriction& r, const ScalarFunction& h) {
  return h.trace(optimal_spectrum(f, r));
}

Frame sample_random_dual(const Frame& f, const DualRestriction& r, std::uint64_t seed) {
  require_restriction(r);
  const DualData data = prepare(f);
  if (!is_feasible(data, r)) {
    throw InfeasibleError("sample_random_dual: " + dual_feasibility_bound(f, r));
  }
  const Index d = f.dim();
  const Index max_rank = data.slots;
  if (max_rank == 0) return data.canonical;

  Rng rng(seed);
  const double cap = r.eps_squared();
  const double budget = std::max(0.0, r.t - data.t0);
  const Index min_rank =
      std::clamp<Index>(static_cast<Index>(std::ceil(budget / cap - 1e-12)), 1, max_rank);
  const Index rank = std::uniform_int_distribution<Index>(min_rank, max_rank)(rng);

  RVector levels(rank);
  for (Index j = 0; j < rank; ++j) levels(j) = cap * uniform(rng, 0.0, 1.0);
  if (levels.sum() < budget) {
    const double room = cap * static_cast<double>(rank) - levels.sum();
    const double alpha = std::min(1.0, (budget - levels.sum()) / room);
    levels.array() += alpha * (cap - levels.array());
  }
  levels = levels.cwiseMin(cap);

  const CMatrix directions = random_unitary(d, rng).leftCols(rank);
  const CMatrix kernel = synthesis_kernel(f);
  const Index kdim = kernel.cols();
  const CMatrix mixed = kernel * random_unitary(kdim, rng);
  return perturbed_dual(data.canonical, factor_through_kernel(mixed, levels, directions));
}

Frame dual_from_bump(const Frame& f, const HermitianMatrix& bump) {
  const DualData data = prepare(f);
  detail::require_same_size(bump.dim(), f.dim(), "dual_from_bump");
  const EigenSystem<Complex> es = eigh(bump);
  const double scale = std::max(1.0, op_norm(bump));
  if (es.values.min() < -1e-9 * scale) throw InputError("dual_from_bump: B is not positive");
  const double cutoff = std::max(1e-10 * std::abs(es.values.max()),
                                 64.0 * std::numeric_limits<double>::epsilon() * scale);
  std::vector<Index> support;
  for (Index j = 0; j < es.values.size(); ++j) {
    if (es.values[j] > cutoff) support.push_back(j);
  }
  RVector levels(static_cast<Index>(support.size()));
  CMatrix directions(f.dim(), static_cast<Index>(support.size()));
  for (size_t k = 0; k < support.size(); ++k) {
    levels(static_cast<Index>(k)) = es.values[support[k]];
    directions.col(static_cast<Index>(k)) = es.vectors.col(support[k]);
  }
  return perturbed_dual(data.canonical,
                        factor_through_kernel(synthesis_kernel(f), levels, directions));
}

}  // namespace framesolve
