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

#ifndef FRAMESOLVE_RANDOM_HPP_
#define FRAMESOLVE_RANDOM_HPP_

#include <cstdint>
#include <random>

#include "framesolve/frame.hpp"

namespace framesolve {

using Rng = std::mt19937_64;

/// Independent stream for trial `trial` of a sweep seeded with `seed`.
Rng trial_rng(std::uint64_t seed, std::uint64_t trial);

/// Entries with i.i.d. standard normal real and imaginary parts.
CMatrix random_gaussian(Index rows, Index cols, Rng& rng);

/// Haar-distributed unitary (QR of a Gaussian matrix with the phase of R's
/// diagonal divided out).
CMatrix random_unitary(Index d, Rng& rng);

HermitianMatrix random_hermitian(Index d, Rng& rng);

/// U diag(exp(x_i)) U^* with x_i uniform in [-log_spread, log_spread].
HermitianMatrix random_positive_definite(Index d, Rng& rng, double log_spread = 1.5);

/// Gaussian matrix, resampled until its condition number is below max_cond.
CMatrix random_invertible(Index d, Rng& rng, double max_cond = 1e4);

/// Gaussian frame, resampled until it spans C^d.
Frame random_frame(Index d, Index n, Rng& rng);

/// Rotation by `angle` in the plane spanned by orthonormal x, y; identity on
/// the orthogonal complement.
CMatrix plane_rotation(const CVector& x, const CVector& y, double angle);

/// plane_rotation in a uniformly random complex 2-plane.
CMatrix random_plane_rotation(Index d, double angle, Rng& rng);

/// Uniform real in [lo, hi).
double uniform(Rng& rng, double lo, double hi);

}  // namespace framesolve

#endif  // FRAMESOLVE_RANDOM_HPP_
