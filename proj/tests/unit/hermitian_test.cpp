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

#include "framesolve/hermitian.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "framesolve/random.hpp"

namespace framesolve {
namespace {

CMatrix cmat(std::initializer_list<std::initializer_list<double>> rows) {
  const Index r = static_cast<Index>(rows.size());
  const Index c = static_cast<Index>(rows.begin()->size());
  CMatrix m(r, c);
  Index i = 0;
  for (const auto& row : rows) {
    Index j = 0;
    for (double x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

HermitianMatrix herm(std::initializer_list<std::initializer_list<double>> rows) {
  return HermitianMatrix(cmat(rows));
}

TEST(Hermitian, RejectsNonHermitian) {
  EXPECT_THROW(herm({{1, 2}, {0, 1}}), InputError);
  CMatrix m = CMatrix::Identity(2, 2);
  m(0, 1) = Complex(0, 1);
  m(1, 0) = Complex(0, 1);  // not conjugate
  EXPECT_THROW((HermitianMatrix(m)), InputError);
  m(1, 0) = Complex(0, -1);
  EXPECT_NO_THROW((HermitianMatrix(m)));
}

TEST(Eigh, Examples) {
  const EigenSystem<Complex> a = eigh(herm({{1, 0}, {0, 4}}));
  EXPECT_NEAR(a.values[0], 4, 1e-14);
  EXPECT_NEAR(a.values[1], 1, 1e-14);
  EXPECT_NEAR(std::abs(a.vectors(1, 0)), 1, 1e-14);
  EXPECT_NEAR(std::abs(a.vectors(0, 1)), 1, 1e-14);

  const Spectrum b = eigenvalues(herm({{2, 1}, {1, 2}}));
  EXPECT_NEAR(b[0], 3, 1e-14);
  EXPECT_NEAR(b[1], 1, 1e-14);

  const EigenSystem<Complex> c = eigh(HermitianMatrix::identity(3));
  for (Index i = 0; i < 3; ++i) EXPECT_NEAR(c.values[i], 1, 1e-14);
  EXPECT_LE((c.vectors.adjoint() * c.vectors - CMatrix::Identity(3, 3)).norm(), 1e-13);
}

TEST(Eigh, ReconstructionAndResiduals) {
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng = trial_rng(31, trial);
    const Index d = std::uniform_int_distribution<Index>(1, 16)(rng);
    const HermitianMatrix a = random_hermitian(d, rng);
    const EigenSystem<Complex> es = eigh(a);
    const double norm = op_norm(a);
    EXPECT_TRUE(es.values.is_nonincreasing());
    EXPECT_LE(op_norm(CMatrix(a.matrix() - rank_one_sum(es.values, es.vectors).matrix())), 1e-9 * norm);
    EXPECT_LE((es.vectors.adjoint() * es.vectors - CMatrix::Identity(d, d)).norm(), 1e-12 * d);
    for (Index i = 0; i < d; ++i) {
      EXPECT_LE((a.matrix() * es.vectors.col(i) - es.values[i] * es.vectors.col(i)).norm(), 1e-12 * norm);
    }
  }
}

TEST(Eigh, UnitaryInvariance) {
  for (int trial = 0; trial < 50; ++trial) {
    Rng rng = trial_rng(37, trial);
    const Index d = std::uniform_int_distribution<Index>(1, 10)(rng);
    const HermitianMatrix a = random_hermitian(d, rng);
    const CMatrix u = random_unitary(d, rng);
    const HermitianMatrix b = congruence(a, u);
    EXPECT_LE(max_abs_diff(eigenvalues(a), eigenvalues(b)), 1e-12 * std::max(1.0, op_norm(a)));
  }
}

TEST(FuncCalc, Examples) {
  const HermitianMatrix d41 = HermitianMatrix::diagonal({4, 1});
  EXPECT_LE((func_calc(d41, ScalarFunction::sqrt()).matrix() - cmat({{2, 0}, {0, 1}})).norm(), 1e-14);
  EXPECT_LE((func_calc(d41, ScalarFunction::inverse()).matrix() - cmat({{0.25, 0}, {0, 1}})).norm(), 1e-14);
  EXPECT_LE((func_calc(herm({{2, 1}, {1, 2}}), ScalarFunction::square()).matrix() - cmat({{5, 4}, {4, 5}})).norm(),
            1e-13);
  EXPECT_THROW(func_calc(HermitianMatrix::diagonal({1, 0}), ScalarFunction::log()), DomainError);
  EXPECT_THROW(func_calc(HermitianMatrix::diagonal({1, -1}), ScalarFunction::sqrt()), DomainError);
}

TEST(FuncCalc, SqrtOfSquareIsIdentity) {
  for (int trial = 0; trial < 50; ++trial) {
    Rng rng = trial_rng(41, trial);
    const Index d = std::uniform_int_distribution<Index>(1, 8)(rng);
    const HermitianMatrix s = random_positive_definite(d, rng);
    const HermitianMatrix back = func_calc(func_calc(s, ScalarFunction::square()), ScalarFunction::sqrt());
    EXPECT_LE(op_norm(CMatrix(back.matrix() - s.matrix())), 1e-10 * op_norm(s));
  }
}

TEST(RankOneSum, Examples) {
  Rng rng = trial_rng(43, 0);
  const CMatrix u = random_unitary(2, rng);
  EXPECT_LE((rank_one_sum(Spectrum{1, 1}, u).matrix() - CMatrix::Identity(2, 2)).norm(), 1e-14);
  EXPECT_LE((rank_one_sum(Spectrum{0.5, 0}, CMatrix(CMatrix::Identity(2, 2))).matrix() -
             cmat({{0.5, 0}, {0, 0}}))
                .norm(),
            0.0);
  EXPECT_THROW(rank_one_sum(Spectrum{1, 1}, cmat({{1, 1}, {0, 1}})), InputError);
  EXPECT_THROW(rank_one_sum(Spectrum{1, 1, 1}, u), DimensionError);
}

TEST(Commutes, Examples) {
  const HermitianMatrix a = HermitianMatrix::diagonal({1, 2});
  EXPECT_TRUE(commutes(a, HermitianMatrix::diagonal({5, -3})));
  EXPECT_FALSE(commutes(a, herm({{0, 1}, {1, 0}})));
  const CMatrix comm = a.matrix() * cmat({{0, 1}, {1, 0}}) - cmat({{0, 1}, {1, 0}}) * a.matrix();
  EXPECT_LE((comm - cmat({{0, -1}, {1, 0}})).norm(), 0.0);
  EXPECT_TRUE(commutes(a, a));
  EXPECT_THROW(commutes(a, HermitianMatrix::identity(3)), DimensionError);
}

TEST(AbsStar, Examples) {
  const double r2 = std::sqrt(2.0);
  EXPECT_LE((abs_star(cmat({{1, 0}, {0, r2}})).matrix() - cmat({{1, 0}, {0, r2}})).norm(), 1e-14);
  Rng rng = trial_rng(47, 0);
  const CMatrix u = random_unitary(3, rng);
  EXPECT_LE((abs_star(u).matrix() - CMatrix::Identity(3, 3)).norm(), 1e-12);
  // V = diag(2,1) R: VV^* = diag(4,1), so |V^*| = diag(2,1).
  const double th = 0.7;
  const CMatrix rot = cmat({{std::cos(th), -std::sin(th)}, {std::sin(th), std::cos(th)}});
  const CMatrix v = cmat({{2, 0}, {0, 1}}) * rot;
  EXPECT_LE((abs_star(v).matrix() - cmat({{2, 0}, {0, 1}})).norm(), 1e-13);
  EXPECT_THROW(abs_star(cmat({{1, 0}, {0, 0}})), InputError);
}

TEST(NormAndDet, Examples) {
  EXPECT_NEAR(op_norm(CMatrix(CMatrix::Identity(3, 3))), 1, 1e-15);
  EXPECT_NEAR(det_h(HermitianMatrix::identity(3)), 1, 1e-15);
  EXPECT_NEAR(op_norm(HermitianMatrix::diagonal({4, 1})), 4, 1e-15);
  EXPECT_NEAR(det_h(HermitianMatrix::diagonal({4, 1})), 4, 1e-15);
  EXPECT_NEAR(op_norm(herm({{2, 1}, {1, 2}})), 3, 1e-14);
  EXPECT_NEAR(det_h(herm({{2, 1}, {1, 2}})), 3, 1e-14);
}

TEST(NormAndDet, DetMatchesLogSum) {
  for (int trial = 0; trial < 50; ++trial) {
    Rng rng = trial_rng(53, trial);
    const Index d = std::uniform_int_distribution<Index>(1, 12)(rng);
    const HermitianMatrix s = random_positive_definite(d, rng);
    const double via_logs = std::exp(log(eigenvalues(s)).trace());
    EXPECT_NEAR(det_h(s) / via_logs, 1.0, 1e-9);
    const Complex lu = s.matrix().determinant();
    EXPECT_NEAR(lu.real() / via_logs, 1.0, 1e-9);
  }
}

TEST(JointSpectrum, BasisInvariantInDegenerateEigenspaces) {
  // A has a double eigenvalue; B acts inside it with eigenvalues {1, 3}.
  Rng rng = trial_rng(59, 0);
  const CMatrix w = random_unitary(3, rng);
  const HermitianMatrix a = rank_one_sum(Spectrum{5, 2, 2}, w);
  CMatrix inner = CMatrix::Zero(3, 3);
  inner(0, 0) = 7;
  inner.block(1, 1, 2, 2) = cmat({{2, 1}, {1, 2}});
  const HermitianMatrix b(CMatrix(w * inner * w.adjoint()));
  EXPECT_TRUE(joint_spectrum_matches(a, b, Spectrum{7, 3, 1}, 1e-9));
  EXPECT_TRUE(joint_spectrum_matches(a, b, Spectrum{7, 1, 3}, 1e-9));
  EXPECT_FALSE(joint_spectrum_matches(a, b, Spectrum{3, 7, 1}, 1e-9));
  const HermitianMatrix mixed(CMatrix(b.matrix() + 0.1 * w * cmat({{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}) * w.adjoint()));
  EXPECT_FALSE(joint_spectrum_matches(a, mixed, Spectrum{7, 3, 1}, 1e-9));
}

TEST(SubspaceIntersection, PrincipalAngles) {
  const CMatrix e12 = cmat({{1, 0}, {0, 1}, {0, 0}});
  const CMatrix e23 = cmat({{0, 0}, {1, 0}, {0, 1}});
  const CMatrix common = subspace_intersection(e12, e23);
  ASSERT_EQ(common.cols(), 1);
  EXPECT_NEAR(std::abs(common(1, 0)), 1.0, 1e-14);
  const CMatrix e3 = cmat({{0}, {0}, {1}});
  EXPECT_EQ(subspace_intersection(e12, e3).cols(), 0);
  // A direction 1e-8 rad away still counts; 1e-4 does not.
  const CMatrix near = cmat({{std::cos(1e-8)}, {0}, {std::sin(1e-8)}});
  EXPECT_EQ(subspace_intersection(e12, near).cols(), 1);
  const CMatrix far = cmat({{std::cos(1e-4)}, {0}, {std::sin(1e-4)}});
  EXPECT_EQ(subspace_intersection(e12, far).cols(), 0);
}

}  // namespace
}  // namespace framesolve
