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

#ifndef FRAMESOLVE_SCALAR_FUNCTION_HPP_
#define FRAMESOLVE_SCALAR_FUNCTION_HPP_

#include <string>
#include <vector>

#include "framesolve/spectrum.hpp"

namespace framesolve {

/// Real functions applied to spectra, either directly (potentials) or through
/// the functional calculus of a Hermitian matrix.
class ScalarFunction {
 public:
  enum class Kind { kIdentity, kSquare, kSqrt, kInverse, kLog, kExp, kPower };

  constexpr ScalarFunction(Kind kind = Kind::kIdentity, double power = 1.0)
      : kind_(kind), power_(power) {}

  static ScalarFunction identity() { return {Kind::kIdentity}; }
  static ScalarFunction square() { return {Kind::kSquare}; }
  static ScalarFunction sqrt() { return {Kind::kSqrt}; }
  static ScalarFunction inverse() { return {Kind::kInverse}; }
  static ScalarFunction log() { return {Kind::kLog}; }
  static ScalarFunction exp() { return {Kind::kExp}; }
  static ScalarFunction power(double p) { return {Kind::kPower, p}; }

  /// Parses "identity", "square", "sqrt", "inverse", "log", "exp" or "power:<p>".
  static ScalarFunction parse(const std::string& name);

  Kind kind() const { return kind_; }
  std::string name() const;

  /// Throws DomainError outside the function's domain (e.g. log of x <= 0).
  double operator()(double x) const;

  /// Sum of f over the entries.
  double trace(const Spectrum& x) const;

 private:
  Kind kind_;
  double power_;
};

/// The increasing convex functions used as potentials in reports and sweeps.
std::vector<ScalarFunction> increasing_convex_family();

}  // namespace framesolve

#endif  // FRAMESOLVE_SCALAR_FUNCTION_HPP_
