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

#include <gtest/gtest.h>

#include "framesolve/dualopt.hpp"
#include "framesolve/frame_io.hpp"
#include "framesolve/random.hpp"
#include "test_support.hpp"

namespace framesolve {
namespace {

using testing::cmat;
using testing::dist;
using testing::e1e2e1;
using testing::real_frame;

TEST(Analysis, RowsAreConjugatedVectors) {
  const Frame f = e1e2e1();
  EXPECT_EQ(dist(f.analysis(), cmat({{1, 0}, {0, 1}, {1, 0}})), 0.0);
  const Frame single = real_frame({{1, 0, 0}});
  EXPECT_EQ(single.analysis().rows(), 1);
  EXPECT_EQ(single.analysis().cols(), 3);

  CMatrix m(2, 1);
  m << Complex(1, 2), Complex(0, -1);
  const Frame c(m);
  // (T_F x)_0 = <x, f_0> = sum x_k conj(f_0k).
  CVector x(2);
  x << Complex(0.5, 0), Complex(0, 1);
  const Complex expected = x(0) * std::conj(m(0, 0)) + x(1) * std::conj(m(1, 0));
  EXPECT_NEAR(std::abs((c.analysis() * x)(0) - expected), 0.0, 1e-15);
}

TEST(Analysis, SynthesisOfBasisVectorIsFrameVector) {
  Rng rng = trial_rng(61, 0);
  const Frame f = random_frame(3, 5, rng);
  for (Index i = 0; i < 5; ++i) {
    CVector e = CVector::Zero(5);
    e(i) = 1.0;
    EXPECT_LE((f.analysis().adjoint() * e - f.vector(i)).norm(), 1e-15);
  }
}

TEST(FrameOperator, Examples) {
  EXPECT_EQ(dist(frame_operator(e1e2e1()).matrix(), cmat({{2, 0}, {0, 1}})), 0.0);
  EXPECT_EQ(dist(frame_operator(real_frame({{1, 0}, {0, 1}})).matrix(), cmat({{1, 0}, {0, 1}})), 0.0);
  const Frame partial = real_frame({{1, 0}});
  EXPECT_EQ(dist(frame_operator(partial).matrix(), cmat({{1, 0}, {0, 0}})), 0.0);
  EXPECT_FALSE(partial.is_frame());
  EXPECT_TRUE(e1e2e1().is_frame());
}

TEST(FrameOperator, PositiveWithTraceNormSum) {
  for (int trial = 0; trial < 50; ++trial) {
    Rng rng = trial_rng(67, trial);
    const Index d = std::uniform_int_distribution<Index>(1, 6)(rng);
    const Index n = std::uniform_int_distribution<Index>(1, 10)(rng);
    const Frame f(random_gaussian(d, n, rng));
    const Spectrum lam = eigenvalues(frame_operator(f));
    EXPECT_GE(lam.min(), -1e-12 * lam.max());
    EXPECT_NEAR(lam.trace(), f.norm_sum(), 1e-12 * f.norm_sum());
    EXPECT_EQ(lam.min() > 1e-10 * lam.max(), f.is_frame());
  }
}

TEST(FrameBounds, Examples) {
  auto [a, b] = frame_bounds(e1e2e1());
  EXPECT_NEAR(a, 1, 1e-15);
  EXPECT_NEAR(b, 2, 1e-15);
  std::tie(a, b) = frame_bounds(real_frame({{1, 0}, {0, 1}}));
  EXPECT_NEAR(a, 1, 1e-15);
  EXPECT_NEAR(b, 1, 1e-15);
  std::tie(a, b) = frame_bounds(real_frame({{2, 0}, {0, 2}}));
  EXPECT_NEAR(a, 4, 1e-15);
  EXPECT_NEAR(b, 4, 1e-15);
  EXPECT_THROW(frame_bounds(real_frame({{1, 0}, {2, 0}})), RankError);
}

TEST(IsTight, Examples) {
  EXPECT_TRUE(is_tight(real_frame({{1, 0}, {0, 1}})));
  EXPECT_FALSE(is_tight(e1e2e1()));
  const double r = 1.0 / std::sqrt(2.0);
  const Frame four = real_frame({{1, 0}, {0, 1}, {r, r}, {r, -r}});
  EXPECT_TRUE(is_tight(four));
  EXPECT_LE(dist(frame_operator(four).matrix(), cmat({{2, 0}, {0, 2}})), 1e-15);
}

TEST(CanonicalDual, Examples) {
  const Frame g = canonical_dual(e1e2e1());
  EXPECT_LE(dist(g.synthesis(), real_frame({{0.5, 0}, {0, 1}, {0.5, 0}}).synthesis()), 1e-15);
  const Frame onb = real_frame({{1, 0}, {0, 1}});
  EXPECT_LE(dist(canonical_dual(onb).synthesis(), onb.synthesis()), 1e-15);
  EXPECT_THROW(canonical_dual(real_frame({{1, 0}, {3, 0}})), RankError);
}

TEST(CanonicalDual, RandomFramesAreDualWithInverseOperator) {
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng = trial_rng(71, trial);
    const Index d = std::uniform_int_distribution<Index>(1, 8)(rng);
    const Index n = std::uniform_int_distribution<Index>(d, 16)(rng);
    const Frame f = random_frame(d, n, rng);
    const Frame g = canonical_dual(f);
    EXPECT_TRUE(dual_check(f, g).is_dual) << "trial " << trial;
    const CMatrix s_inv = frame_operator(f).matrix().inverse();
    EXPECT_LE(op_norm(CMatrix(frame_operator(g).matrix() - s_inv)), 1e-9 * op_norm(s_inv));
    EXPECT_LE(op_norm(CMatrix(g.analysis() - f.analysis() * s_inv)), 1e-9 * op_norm(g.analysis()));
  }
}

TEST(DualCheck, Examples) {
  const Frame f = e1e2e1();
  const DualPairReport canon = dual_check(f, canonical_dual(f));
  EXPECT_TRUE(canon.is_dual);
  EXPECT_LE(canon.residual, 1e-15);
  EXPECT_TRUE(dual_check(f, real_frame({{1, 0}, {0, 1}, {0, 0}})).is_dual);
  const DualPairReport self = dual_check(f, f);
  EXPECT_FALSE(self.is_dual);
  EXPECT_NEAR(self.residual, 1.0, 1e-15);
  EXPECT_THROW(dual_check(f, real_frame({{1, 0}, {0, 1}})), DimensionError);
}

TEST(ApplyOperator, Examples) {
  const Frame f = e1e2e1();
  EXPECT_EQ(dist(apply_operator(CMatrix::Identity(2, 2), f).synthesis(), f.synthesis()), 0.0);
  const CMatrix v = cmat({{1, 0}, {0, std::sqrt(2.0)}});
  EXPECT_LE(dist(frame_operator(apply_operator(v, f)).matrix(), cmat({{2, 0}, {0, 2}})), 1e-14);
  EXPECT_THROW(apply_operator(cmat({{1, 0}, {0, 0}}), f), InputError);
}

TEST(ApplyOperator, FrameOperatorIsVSVStar) {
  for (int trial = 0; trial < 50; ++trial) {
    Rng rng = trial_rng(73, trial);
    const Index d = std::uniform_int_distribution<Index>(1, 6)(rng);
    const Frame f = random_frame(d, d + 3, rng);
    const CMatrix v = random_invertible(d, rng);
    const CMatrix s = frame_operator(f).matrix();
    const CMatrix got = frame_operator(apply_operator(v, f)).matrix();
    EXPECT_LE(op_norm(CMatrix(got - v * s * v.adjoint())), 1e-10 * op_norm(got));
    // Unitary V preserves the spectrum.
    const CMatrix u = random_unitary(d, rng);
    EXPECT_LE(max_abs_diff(eigenvalues(frame_operator(apply_operator(u, f))), eigenvalues(frame_operator(f))),
              1e-10 * op_norm(s));
  }
}

TEST(ApplyOperator, GroupAction) {
  Rng rng = trial_rng(79, 0);
  const Frame f = random_frame(4, 7, rng);
  const CMatrix v1 = random_invertible(4, rng);
  const CMatrix v2 = random_invertible(4, rng);
  const Frame lhs = apply_operator(v2, apply_operator(v1, f));
  const Frame rhs = apply_operator(CMatrix(v2 * v1), f);
  EXPECT_LE(dist(lhs.synthesis(), rhs.synthesis()), 1e-10 * rhs.synthesis().norm());
}

TEST(FramePotential, Examples) {
  EXPECT_NEAR(frame_potential(e1e2e1()), 5, 1e-14);
  Rng rng = trial_rng(83, 0);
  EXPECT_NEAR(frame_potential(Frame(random_unitary(4, rng))), 4, 1e-12);
  EXPECT_NEAR(frame_potential(real_frame({{1, 0}, {0, 1}, {0, 0}})), 2, 1e-14);
}

TEST(FramePotential, DoubleSumMatchesTraceOfSquare) {
  for (int trial = 0; trial < 50; ++trial) {
    Rng rng = trial_rng(89, trial);
    const Index d = std::uniform_int_distribution<Index>(1, 6)(rng);
    const Frame f(random_gaussian(d, std::uniform_int_distribution<Index>(1, 12)(rng), rng));
    const double via_s = convex_potential(f, ScalarFunction::square());
    EXPECT_NEAR(frame_potential(f), via_s, 1e-9 * via_s);
  }
}

TEST(ConvexPotential, Examples) {
  EXPECT_NEAR(mse(e1e2e1()), 1.5, 1e-15);
  EXPECT_NEAR(convex_potential(real_frame({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), ScalarFunction::square()), 3, 0);
  EXPECT_NEAR(convex_potential(e1e2e1(), ScalarFunction::square()), frame_potential(e1e2e1()), 1e-14);
  EXPECT_THROW(mse(real_frame({{1, 0}})), RankError);
}

TEST(Duals, CanonicalDualHasMinimalTrace) {
  for (int trial = 0; trial < 30; ++trial) {
    Rng rng = trial_rng(97, trial);
    const Index d = std::uniform_int_distribution<Index>(1, 5)(rng);
    const Frame f = random_frame(d, d + std::uniform_int_distribution<Index>(1, 5)(rng), rng);
    const double t0 = frame_operator(canonical_dual(f)).trace();
    const DualRestriction r{t0 + 0.3, 1.0};
    if (!feasible_dual(f, r)) continue;
    for (int k = 0; k < 20; ++k) {
      const Frame g = sample_random_dual(f, r, rng());
      ASSERT_TRUE(dual_check(f, g).is_dual);
      EXPECT_LE(t0, frame_operator(g).trace() + 1e-12);
    }
  }
}

TEST(SynthesisKernel, OrthonormalNullSpace) {
  Rng rng = trial_rng(101, 0);
  const Frame f = random_frame(3, 7, rng);
  const CMatrix k = synthesis_kernel(f);
  ASSERT_EQ(k.cols(), 4);
  EXPECT_LE((f.synthesis() * k).norm(), 1e-12);
  EXPECT_LE((k.adjoint() * k - CMatrix::Identity(4, 4)).norm(), 1e-12);
}

TEST(FrameJson, RoundTripAndSchemaErrors) {
  Rng rng = trial_rng(103, 0);
  const Frame f = random_frame(2, 3, rng);
  const Frame back = frame_from_json(nlohmann::json::parse(frame_to_json(f).dump()));
  EXPECT_EQ(dist(back.synthesis(), f.synthesis()), 0.0);
  EXPECT_THROW(frame_from_json(nlohmann::json::parse(R"({"d": 2, "n": 1, "vectors": [[[1, 0]]]})")),
               InputError);
  EXPECT_THROW(frame_from_json(nlohmann::json::parse(R"({"d": 1, "n": 1})")), InputError);
  EXPECT_THROW(frame_from_json(nlohmann::json::parse(R"({"d": 1, "n": 1, "vectors": [[["a", 0]]]})")),
               InputError);
  const Frame plain = frame_from_json(nlohmann::json::parse(R"({"d": 1, "n": 1, "vectors": [[2.5]]})"));
  EXPECT_EQ(plain.vector(0)(0), Complex(2.5, 0));
  EXPECT_THROW(read_frame_file("/nonexistent/frame.json"), InputError);
}

}  // namespace
}  // namespace framesolve
