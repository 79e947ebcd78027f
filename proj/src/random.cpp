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

#include "framesolve/random.hpp"

#include <cmath>

namespace framesolve {

Rng trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32),
                    0x9e3779b9u};
  return Rng(seq);
}

double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

CMatrix random_gaussian(Index rows, Index cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMatrix m(rows, cols);
  // Column-major fill order keeps the stream layout independent of Eigen's storage.
  for (Index c = 0; c < cols; ++c) {
    for (Index r = 0; r < rows; ++r) {
      const double re = normal(rng);
      const double im = normal(rng);
      m(r, c) = Complex(re, im);
    }
  }
  return m;
}

CMatrix random_unitary(Index d, Rng& rng) {
  const CMatrix g = random_gaussian(d, d, rng);
  Eigen::HouseholderQR<CMatrix> qr(g);
  CMatrix q = qr.householderQ();
  const CMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Index j = 0; j < d; ++j) {
    const double mag = std::abs(r(j, j));
    if (mag > 0.0) q.col(j) *= r(j, j) / mag;
  }
  return q;
}

HermitianMatrix random_hermitian(Index d, Rng& rng) {
  const CMatrix g = random_gaussian(d, d, rng);
  return HermitianMatrix(CMatrix((g + g.adjoint()) / 2.0));
}

HermitianMatrix random_positive_definite(Index d, Rng& rng, double log_spread) {
  const CMatrix u = random_unitary(d, rng);
  RVector levels(d);
  for (Index i = 0; i < d; ++i) levels(i) = std::exp(uniform(rng, -log_spread, log_spread));
  return HermitianMatrix(CMatrix(u * levels.cast<Complex>().asDiagonal() * u.adjoint()));
}

CMatrix random_invertible(Index d, Rng& rng, double max_cond) {
  while (true) {
    CMatrix g = random_gaussian(d, d, rng);
    const RVector sv = singular_values(g);
    if (sv(d - 1) > 0.0 && sv(0) / sv(d - 1) < max_cond) return g;
  }
}

Frame random_frame(Index d, Index n, Rng& rng) {
  if (d < 1 || n < d) throw ParameterError("random_frame: need n >= d >= 1");
  while (true) {
    Frame f(random_gaussian(d, n, rng));
    if (f.is_frame()) return f;
  }
}

CMatrix plane_rotation(const CVector& x, const CVector& y, double angle) {
  const Index d = x.size();
  const CMatrix p = x * x.adjoint() + y * y.adjoint();
  return CMatrix::Identity(d, d) + (std::cos(angle) - 1.0) * p +
         std::sin(angle) * (y * x.adjoint() - x * y.adjoint());
}

CMatrix random_plane_rotation(Index d, double angle, Rng& rng) {
  if (d < 2) return CMatrix::Identity(d, d);
  const CMatrix u = random_unitary(d, rng);
  return plane_rotation(u.col(0), u.col(1), angle);
}

}  // namespace framesolve
