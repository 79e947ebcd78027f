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

#ifndef FRAMESOLVE_FRAME_HPP_
#define FRAMESOLVE_FRAME_HPP_

#include <string>
#include <utility>
#include <vector>

#include "framesolve/hermitian.hpp"
#include "framesolve/scalar_function.hpp"

namespace framesolve {

/// A finite sequence of n vectors in C^d. Inner products are linear in the
/// first argument, so the analysis operator has rows f_i^*.
///
/// Rank-deficient sequences are representable; `is_frame()` reports whether
/// the vectors span C^d.
class Frame {
 public:
  /// Smallest singular value of the synthesis matrix above this fraction of
  /// the largest one counts as full rank.
  static constexpr double kRankCutoff = 1e-10;

  Frame() = default;
  /// Columns of `synthesis` are the frame vectors (a d x n matrix).
  explicit Frame(CMatrix synthesis);
  Frame(Index d, const std::vector<CVector>& vectors);

  Index dim() const { return synthesis_.rows(); }
  Index size() const { return synthesis_.cols(); }
  CVector vector(Index i) const { return synthesis_.col(i); }

  /// T_F^*: C^n -> C^d, a -> sum a_i f_i.
  const CMatrix& synthesis() const { return synthesis_; }
  /// T_F: C^d -> C^n, x -> (<x, f_i>)_i.
  CMatrix analysis() const { return synthesis_.adjoint(); }

  bool is_frame() const;
  double norm_sum() const { return synthesis_.squaredNorm(); }

 private:
  CMatrix synthesis_;
};

/// S_F = T_F^* T_F = sum f_i (x) f_i.
HermitianMatrix frame_operator(const Frame& f);

/// (lambda_min(S_F), lambda_max(S_F)). Throws RankError for non-frames.
std::pair<double, double> frame_bounds(const Frame& f);

/// ||S_F - (tr S_F / d) I|| <= tol * tr S_F.
bool is_tight(const Frame& f, double tol = 1e-9);

/// {S_F^{-1} f_i}. Throws RankError for non-frames.
Frame canonical_dual(const Frame& f);

struct DualPairReport {
  double residual = 0.0;  // ||T_F^* T_G - I||
  bool is_dual = false;
};

DualPairReport dual_check(const Frame& f, const Frame& g, double tol = 1e-9);

/// V . F = {V f_i}; its frame operator is V S_F V^*.
Frame apply_operator(const CMatrix& v, const Frame& f);

/// sum_{i,j} |<f_i, f_j>|^2, cross-checked against tr(S_F^2).
double frame_potential(const Frame& f);

/// tr h(S_F).
double convex_potential(const Frame& f, const ScalarFunction& h);

/// tr S_F^{-1}.
double mse(const Frame& f);

/// Orthonormal basis (columns) of ker T_F^* in C^n, ordered by descending
/// right-singular-vector index of the synthesis matrix.
CMatrix synthesis_kernel(const Frame& f);

}  // namespace framesolve

#endif  // FRAMESOLVE_FRAME_HPP_
