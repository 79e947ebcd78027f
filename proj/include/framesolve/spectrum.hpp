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

#ifndef FRAMESOLVE_SPECTRUM_HPP_
#define FRAMESOLVE_SPECTRUM_HPP_

#include <initializer_list>
#include <vector>

#include "framesolve/common.hpp"

namespace framesolve {

/// A finite real vector of eigenvalue-like levels.
///
/// Entries are kept in the order they were supplied; `desc()` and `asc()`
/// return stably sorted copies (ties keep input order).
class Spectrum {
 public:
  Spectrum() = default;
  explicit Spectrum(RVector values);
  Spectrum(std::initializer_list<double> values);
  explicit Spectrum(const std::vector<double>& values);

  Index size() const { return values_.size(); }
  bool empty() const { return values_.size() == 0; }
  double operator[](Index i) const { return values_(i); }
  const RVector& values() const { return values_; }
  std::vector<double> to_vector() const;

  Spectrum desc() const;
  Spectrum asc() const;
  double trace() const { return values_.sum(); }
  double max() const { return values_.maxCoeff(); }
  double min() const { return values_.minCoeff(); }

  bool is_nonincreasing() const;
  bool is_nondecreasing() const;

  /// Prefix sums of the stored order (not sorted).
  RVector partial_sums() const;

  // Range over [begin, begin + count).
  Spectrum segment(Index begin, Index count) const;
  static Spectrum concat(const Spectrum& a, const Spectrum& b);

 private:
  RVector values_;
};

/// Entrywise arithmetic helpers on spectra of equal length.
Spectrum operator+(const Spectrum& a, const Spectrum& b);
Spectrum operator-(const Spectrum& a, const Spectrum& b);
Spectrum hadamard(const Spectrum& a, const Spectrum& b);
Spectrum log(const Spectrum& x);
Spectrum exp(const Spectrum& x);
Spectrum scaled(const Spectrum& x, double factor);

/// Entrywise comparison within an absolute tolerance.
bool approx_equal(const Spectrum& a, const Spectrum& b, double tol);
double max_abs_diff(const Spectrum& a, const Spectrum& b);

/// Slack allowed in partial-sum and partial-product comparisons.
class OrderTolerance {
 public:
  static constexpr double kDefault = 1e-9;

  OrderTolerance() = default;
  explicit OrderTolerance(double abs_tol);

  double abs_tol() const { return abs_tol_; }

 private:
  double abs_tol_ = kDefault;
};

// Smallest value of  sum_{i<=k} y_i^desc - sum_{i<=k} x_i^desc  over k. Nonnegative
// exactly when x is submajorized by y.
double submajorization_slack(const Spectrum& x, const Spectrum& y);

// Same in the log domain for k < d, with the k = d term entering as -|difference|
// so that a negative value flags a determinant mismatch. Requires positive entries.
double log_majorization_slack(const Spectrum& x, const Spectrum& y);

/// x is submajorized by y: every partial sum of x sorted decreasingly is at most
/// the matching partial sum of y (plus tol).
bool submajorizes(const Spectrum& x, const Spectrum& y, OrderTolerance tol = {});

/// x is majorized by y: submajorized and equal traces.
bool majorizes(const Spectrum& x, const Spectrum& y, OrderTolerance tol = {});

/// x is log-majorized by y. The tolerance applies to sums of logarithms.
/// Throws DomainError on a nonpositive entry.
bool log_majorizes(const Spectrum& x, const Spectrum& y, OrderTolerance tol = {});

/// Asserts the implication "log-majorized implies submajorized" on one input:
/// returns false only when x is log-majorized by y but not submajorized.
bool log_to_weak_check(const Spectrum& x, const Spectrum& y, OrderTolerance tol = {});

enum class ConvexFamily {
  kPowers,  // (x^+)^p, p = 1..4
  kExp,     // e^x
  kHinge,   // max(x - c, 0) for c on the joint breakpoints
  kAll,
};

/// Checks sum f(x_i) <= sum f(y_i) for every increasing convex f in the family.
/// The slack is relative: tol * max(1, |sum f(y_i)|).
bool tracial_convex_check(const Spectrum& x, const Spectrum& y, ConvexFamily family,
                          OrderTolerance tol = {});

}  // namespace framesolve

#endif  // FRAMESOLVE_SPECTRUM_HPP_
