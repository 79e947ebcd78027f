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

#include "framesolve/frame.hpp"

#include <cmath>

namespace framesolve {

Frame::Frame(CMatrix synthesis) : synthesis_(std::move(synthesis)) {
  if (synthesis_.rows() < 1 || synthesis_.cols() < 1) {
    throw DimensionError("Frame: need d >= 1 and n >= 1");
  }
  if (!synthesis_.allFinite()) throw DomainError("Frame: non-finite entry");
}

Frame::Frame(Index d, const std::vector<CVector>& vectors) {
  CMatrix m(d, static_cast<Index>(vectors.size()));
  for (size_t i = 0; i < vectors.size(); ++i) {
    detail::require_same_size(vectors[i].size(), d, "Frame vector");
    m.col(static_cast<Index>(i)) = vectors[i];
  }
  *this = Frame(std::move(m));
}

bool Frame::is_frame() const {
  if (size() < dim()) return false;
  const RVector sv = singular_values(synthesis_);
  return sv(0) > 0.0 && sv(sv.size() - 1) > kRankCutoff * sv(0);
}

HermitianMatrix frame_operator(const Frame& f) {
  return HermitianMatrix(CMatrix(f.synthesis() * f.synthesis().adjoint()));
}

namespace {

void require_frame(const Frame& f, const char* what) {
  if (!f.is_frame()) throw RankError(std::string(what) + ": vectors do not span C^d");
}

}  // namespace

std::pair<double, double> frame_bounds(const Frame& f) {
  require_frame(f, "frame_bounds");
  const Spectrum ev = eigenvalues(frame_operator(f));
  return {ev.min(), ev.max()};
}

bool is_tight(const Frame& f, double tol) {
  const HermitianMatrix s = frame_operator(f);
  const double tr = s.trace();
  const Index d = f.dim();
  const CMatrix diff = s.matrix() - (tr / static_cast<double>(d)) * CMatrix::Identity(d, d);
  return op_norm(diff) <= tol * tr;
}

Frame canonical_dual(const Frame& f) {
  require_frame(f, "canonical_dual");
  const HermitianMatrix s = frame_operator(f);
  return Frame(CMatrix(s.matrix().ldlt().solve(f.synthesis())));
}

DualPairReport dual_check(const Frame& f, const Frame& g, double tol) {
  detail::require_same_size(f.dim(), g.dim(), "dual_check (d)");
  detail::require_same_size(f.size(), g.size(), "dual_check (n)");
  const Index d = f.dim();
  DualPairReport r;
  r.residual = op_norm(CMatrix(f.synthesis() * g.analysis() - CMatrix::Identity(d, d)));
  r.is_dual = r.residual <= tol;
  return r;
}

Frame apply_operator(const CMatrix& v, const Frame& f) {
  if (v.rows() != v.cols()) throw DimensionError("apply_operator: V must be square");
  detail::require_same_size(v.cols(), f.dim(), "apply_operator");
  const RVector sv = singular_values(v);
  if (!(sv(sv.size() - 1) > 1e-12 * sv(0))) throw InputError("apply_operator: V is singular");
  return Frame(CMatrix(v * f.synthesis()));
}

double frame_potential(const Frame& f) {
  const CMatrix grammian = f.analysis() * f.synthesis();  // <f_j, f_i>
  const double double_sum = grammian.squaredNorm();
  const HermitianMatrix s = frame_operator(f);
  const double trace_square = std::real((s.matrix() * s.matrix()).trace());
  if (std::abs(double_sum - trace_square) > 1e-9 * std::max(1.0, std::abs(trace_square))) {
    throw NumericError("frame_potential: double sum and tr(S^2) disagree");
  }
  return double_sum;
}

double convex_potential(const Frame& f, const ScalarFunction& h) {
  if (h.kind() == ScalarFunction::Kind::kInverse) require_frame(f, "convex_potential");
  return h.trace(eigenvalues(frame_operator(f)));
}

double mse(const Frame& f) { return convex_potential(f, ScalarFunction::inverse()); }

CMatrix synthesis_kernel(const Frame& f) {
  const Index n = f.size();
  Eigen::JacobiSVD<CMatrix> svd(f.synthesis(), Eigen::ComputeFullV);
  const Index rank = numerical_rank(f.synthesis(), Frame::kRankCutoff);
  const Index k = n - rank;
  CMatrix out(n, k);
  for (Index j = 0; j < k; ++j) out.col(j) = svd.matrixV().col(n - 1 - j);
  return out;
}

}  // namespace framesolve
