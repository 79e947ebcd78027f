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

#ifndef FRAMESOLVE_HERMITIAN_HPP_
#define FRAMESOLVE_HERMITIAN_HPP_

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "framesolve/common.hpp"
#include "framesolve/scalar_function.hpp"
#include "framesolve/spectrum.hpp"

namespace framesolve {

template <typename Scalar>
inline constexpr bool kSupportedScalar =
    std::is_same_v<Scalar, double> || std::is_same_v<Scalar, Complex>;

/// Self-adjoint matrix over double or complex<double>. The constructor checks
/// hermiticity up to a relative tolerance and stores the symmetrized part.
template <typename Scalar>
class Hermitian {
  static_assert(kSupportedScalar<Scalar>, "Hermitian<Scalar>: double or complex<double> only");

 public:
  using MatrixType = Matrix<Scalar>;
  static constexpr double kDefaultTol = 1e-8;

  Hermitian() = default;

  explicit Hermitian(const MatrixType& a, double tol = kDefaultTol) {
    if (a.rows() != a.cols()) throw DimensionError("Hermitian: matrix must be square");
    if (!a.allFinite()) throw DomainError("Hermitian: non-finite entry");
    const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
    const double asym = a.size() == 0 ? 0.0 : (a - a.adjoint()).cwiseAbs().maxCoeff();
    if (asym > tol * scale) {
      throw InputError("Hermitian: matrix is not self-adjoint (max |A - A*| = " +
                       std::to_string(asym) + ")");
    }
    m_ = (a + a.adjoint()) / 2.0;
  }

  static Hermitian identity(Index d) { return Hermitian(MatrixType::Identity(d, d)); }

  static Hermitian zero(Index d) { return Hermitian(MatrixType::Zero(d, d)); }

  static Hermitian diagonal(const Spectrum& values) {
    return Hermitian(MatrixType(values.values().template cast<Scalar>().asDiagonal()));
  }

  Index dim() const { return m_.rows(); }
  const MatrixType& matrix() const { return m_; }
  double trace() const { return std::real(m_.trace()); }

  friend Hermitian operator+(const Hermitian& a, const Hermitian& b) {
    detail::require_same_size(a.dim(), b.dim(), "Hermitian +");
    return Hermitian(MatrixType(a.m_ + b.m_));
  }
  friend Hermitian operator-(const Hermitian& a, const Hermitian& b) {
    detail::require_same_size(a.dim(), b.dim(), "Hermitian -");
    return Hermitian(MatrixType(a.m_ - b.m_));
  }
  friend Hermitian operator*(double s, const Hermitian& a) { return Hermitian(MatrixType(s * a.m_)); }

 private:
  MatrixType m_;
};

using HermitianMatrix = Hermitian<Complex>;

/// Eigenvalues in nonincreasing order; column i of `vectors` pairs with values[i].
template <typename Scalar>
struct EigenSystem {
  Spectrum values;
  Matrix<Scalar> vectors;
};

/// Hermitian eigendecomposition, eigenvalues nonincreasing. Backed by Eigen's
/// tridiagonal QR solver, which is deterministic for a fixed input.
template <typename Scalar>
EigenSystem<Scalar> eigh(const Hermitian<Scalar>& a) {
  if (a.dim() == 0) throw DimensionError("eigh: empty matrix");
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(a.matrix());
  if (solver.info() != Eigen::Success) throw NumericError("eigh: eigensolver did not converge");
  EigenSystem<Scalar> out;
  out.values = Spectrum(RVector(solver.eigenvalues().reverse()));
  out.vectors = solver.eigenvectors().rowwise().reverse();
  return out;
}

/// lambda(A), nonincreasing.
template <typename Scalar>
Spectrum eigenvalues(const Hermitian<Scalar>& a) {
  if (a.dim() == 0) throw DimensionError("eigenvalues: empty matrix");
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(a.matrix(), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("eigenvalues: solver did not converge");
  return Spectrum(RVector(solver.eigenvalues().reverse()));
}

/// sum_i values_i v_i (x) v_i for orthonormal columns v_i.
template <typename Derived>
Hermitian<typename Derived::Scalar> rank_one_sum(const Spectrum& values,
                                                 const Eigen::MatrixBase<Derived>& vectors,
                                                 double tol = 1e-8) {
  using Scalar = typename Derived::Scalar;
  detail::require_same_size(values.size(), vectors.cols(), "rank_one_sum");
  const Index k = vectors.cols();
  const Matrix<Scalar> gram = vectors.adjoint() * vectors;
  if (k > 0 && (gram - Matrix<Scalar>::Identity(k, k)).cwiseAbs().maxCoeff() > tol) {
    throw InputError("rank_one_sum: vectors are not orthonormal");
  }
  const Matrix<Scalar> out =
      vectors * values.values().template cast<Scalar>().asDiagonal() * vectors.adjoint();
  return Hermitian<Scalar>(out);
}

/// h(A) through the spectral decomposition. Throws DomainError when h is
/// undefined on some eigenvalue.
template <typename Scalar>
Hermitian<Scalar> func_calc(const Hermitian<Scalar>& a, const ScalarFunction& h) {
  const EigenSystem<Scalar> es = eigh(a);
  RVector mapped(es.values.size());
  for (Index i = 0; i < mapped.size(); ++i) mapped(i) = h(es.values[i]);
  return rank_one_sum(Spectrum(mapped), es.vectors, 1e-6);
}

/// Largest singular value.
template <typename Derived>
double op_norm(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return 0.0;
  using Plain = Matrix<typename Derived::Scalar>;
  Eigen::JacobiSVD<Plain> svd(Plain(m), Eigen::ComputeThinU | Eigen::ComputeThinV);
  return svd.singularValues()(0);
}

template <typename Scalar>
double op_norm(const Hermitian<Scalar>& a) {
  const Spectrum ev = eigenvalues(a);
  return std::max(std::abs(ev.max()), std::abs(ev.min()));
}

/// Singular values, nonincreasing.
template <typename Derived>
RVector singular_values(const Eigen::MatrixBase<Derived>& m) {
  using Plain = Matrix<typename Derived::Scalar>;
  Eigen::JacobiSVD<Plain> svd{Plain(m)};
  return svd.singularValues();
}

/// Number of singular values above rel_cutoff * sigma_max.
template <typename Derived>
Index numerical_rank(const Eigen::MatrixBase<Derived>& m, double rel_cutoff = 1e-10) {
  if (m.size() == 0) return 0;
  const RVector sv = singular_values(m);
  if (sv(0) <= 0.0) return 0;
  return (sv.array() > rel_cutoff * sv(0)).count();
}

/// Determinant of a Hermitian matrix as the product of its eigenvalues.
template <typename Scalar>
double det_h(const Hermitian<Scalar>& a) {
  const Spectrum ev = eigenvalues(a);
  return ev.values().prod();
}

/// ||AB - BA|| <= tol * ||A|| * ||B||.
template <typename Scalar>
bool commutes(const Hermitian<Scalar>& a, const Hermitian<Scalar>& b, double tol = 1e-8) {
  detail::require_same_size(a.dim(), b.dim(), "commutes");
  const double scale = op_norm(a) * op_norm(b);
  if (scale == 0.0) return true;
  const Matrix<Scalar> comm = a.matrix() * b.matrix() - b.matrix() * a.matrix();
  return op_norm(comm) <= tol * scale;
}

/// V*V.
template <typename Derived>
Hermitian<typename Derived::Scalar> gram(const Eigen::MatrixBase<Derived>& v) {
  using Plain = Matrix<typename Derived::Scalar>;
  return Hermitian<typename Derived::Scalar>(Plain(v.adjoint() * v), 1e-6);
}

/// VV*.
template <typename Derived>
Hermitian<typename Derived::Scalar> cogram(const Eigen::MatrixBase<Derived>& v) {
  using Plain = Matrix<typename Derived::Scalar>;
  return Hermitian<typename Derived::Scalar>(Plain(v * v.adjoint()), 1e-6);
}

/// V* S V.
template <typename Scalar, typename Derived>
Hermitian<Scalar> congruence(const Hermitian<Scalar>& s, const Eigen::MatrixBase<Derived>& v) {
  return Hermitian<Scalar>(Matrix<Scalar>(v.adjoint() * s.matrix() * v), 1e-6);
}

/// |V*| = (VV*)^{1/2}. Throws InputError when V is singular.
template <typename Derived>
Hermitian<typename Derived::Scalar> abs_star(const Eigen::MatrixBase<Derived>& v,
                                             double rel_cutoff = 1e-12) {
  if (v.rows() != v.cols()) throw DimensionError("abs_star: V must be square");
  const RVector sv = singular_values(v);
  if (sv.size() == 0 || !(sv(sv.size() - 1) > rel_cutoff * sv(0))) {
    throw InputError("abs_star: V is singular");
  }
  return func_calc(cogram(v), ScalarFunction::sqrt());
}

/// Groups consecutive entries of a nonincreasing spectrum that differ by at
/// most tol * max(1, max|value|).
inline std::vector<std::vector<Index>> eigen_clusters(const Spectrum& values, double tol) {
  std::vector<std::vector<Index>> out;
  if (values.empty()) return out;
  const double scale = std::max(1.0, values.values().cwiseAbs().maxCoeff());
  out.push_back({0});
  for (Index i = 1; i < values.size(); ++i) {
    if (std::abs(values[i - 1] - values[i]) <= tol * scale) {
      out.back().push_back(i);
    } else {
      out.push_back({i});
    }
  }
  return out;
}

/// Whether B is block diagonal along the eigenspaces of A and, on each such
/// eigenspace, has eigenvalues equal (as a multiset) to `expected` restricted
/// to the matching indices of lambda(A). Independent of the eigenbasis chosen
/// inside degenerate eigenspaces.
template <typename Scalar>
bool joint_spectrum_matches(const Hermitian<Scalar>& a, const Hermitian<Scalar>& b,
                            const Spectrum& expected, double tol) {
  detail::require_same_size(a.dim(), b.dim(), "joint_spectrum_matches");
  detail::require_same_size(a.dim(), expected.size(), "joint_spectrum_matches");
  const EigenSystem<Scalar> es = eigh(a);
  const double scale = std::max(1.0, op_norm(b));
  Matrix<Scalar> block_part = Matrix<Scalar>::Zero(a.dim(), a.dim());
  for (const auto& cluster : eigen_clusters(es.values, tol)) {
    Matrix<Scalar> w(a.dim(), static_cast<Index>(cluster.size()));
    RVector want(static_cast<Index>(cluster.size()));
    for (size_t j = 0; j < cluster.size(); ++j) {
      w.col(static_cast<Index>(j)) = es.vectors.col(cluster[j]);
      want(static_cast<Index>(j)) = expected[cluster[j]];
    }
    const Matrix<Scalar> compressed = w.adjoint() * b.matrix() * w;
    block_part += w * compressed * w.adjoint();
    const Spectrum got = eigenvalues(Hermitian<Scalar>(compressed, 1e-6)).asc();
    const Spectrum need = Spectrum(want).asc();
    if (max_abs_diff(got, need) > tol * scale) return false;
  }
  return op_norm(Matrix<Scalar>(b.matrix() - block_part)) <= tol * scale;
}

/// Orthonormal basis of the eigenspace of A for eigenvalues within
/// tol * max(1, ||A||) of `value` (possibly zero columns).
template <typename Scalar>
Matrix<Scalar> eigenspace(const EigenSystem<Scalar>& es, double value, double tol) {
  const double scale = std::max(1.0, es.values.values().cwiseAbs().maxCoeff());
  std::vector<Index> cols;
  for (Index i = 0; i < es.values.size(); ++i) {
    if (std::abs(es.values[i] - value) <= tol * scale) cols.push_back(i);
  }
  Matrix<Scalar> out(es.vectors.rows(), static_cast<Index>(cols.size()));
  for (size_t j = 0; j < cols.size(); ++j) out.col(static_cast<Index>(j)) = es.vectors.col(cols[j]);
  return out;
}

/// Orthonormal basis of span(Q1) n span(Q2) for orthonormal Q1, Q2: the
/// directions of Q2 whose principal angle to span(Q1) is below angle_tol.
template <typename Scalar>
Matrix<Scalar> subspace_intersection(const Matrix<Scalar>& q1, const Matrix<Scalar>& q2,
                                     double angle_tol = 1e-6) {
  const Index n = q1.rows();
  if (q1.cols() == 0 || q2.cols() == 0) return Matrix<Scalar>(n, 0);
  // Singular values of (I - Q1 Q1*) Q2 are the sines of the principal angles.
  const Matrix<Scalar> residual = q2 - q1 * (q1.adjoint() * q2);
  Eigen::JacobiSVD<Matrix<Scalar>> svd(residual, Eigen::ComputeFullV);
  const RVector sines = svd.singularValues();
  const Matrix<Scalar>& right = svd.matrixV();
  const double threshold = std::sin(angle_tol);
  std::vector<Index> keep;
  for (Index j = 0; j < q2.cols(); ++j) {
    const double s = j < sines.size() ? sines(j) : 0.0;
    if (s < threshold) keep.push_back(j);
  }
  Matrix<Scalar> out(n, static_cast<Index>(keep.size()));
  for (size_t j = 0; j < keep.size(); ++j) out.col(static_cast<Index>(j)) = q2 * right.col(keep[j]);
  return out;
}

}  // namespace framesolve

#endif  // FRAMESOLVE_HERMITIAN_HPP_
