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

#include "framesolve/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace framesolve {

namespace {

void require_finite(const RVector& v) {
  if (!v.allFinite()) throw DomainError("Spectrum: non-finite entry");
}

std::vector<Index> stable_order(const RVector& v, bool descending) {
  std::vector<Index> idx(static_cast<size_t>(v.size()));
  std::iota(idx.begin(), idx.end(), Index{0});
  if (descending) {
    std::stable_sort(idx.begin(), idx.end(), [&](Index a, Index b) { return v(a) > v(b); });
  } else {
    std::stable_sort(idx.begin(), idx.end(), [&](Index a, Index b) { return v(a) < v(b); });
  }
  return idx;
}

RVector permuted(const RVector& v, const std::vector<Index>& idx) {
  RVector out(v.size());
  for (Index i = 0; i < v.size(); ++i) out(i) = v(idx[static_cast<size_t>(i)]);
  return out;
}

void require_positive(const Spectrum& x, const char* what) {
  if (x.size() > 0 && !(x.min() > 0.0)) {
    throw DomainError(std::string(what) + ": entries must be strictly positive");
  }
}

}  // namespace

Spectrum::Spectrum(RVector values) : values_(std::move(values)) {
  if (values_.size() == 0) throw DimensionError("Spectrum: length must be at least 1");
  require_finite(values_);
}

Spectrum::Spectrum(std::initializer_list<double> values)
    : Spectrum(RVector(Eigen::Map<const RVector>(values.begin(), static_cast<Index>(values.size())))) {}

Spectrum::Spectrum(const std::vector<double>& values)
    : Spectrum(RVector(Eigen::Map<const RVector>(values.data(), static_cast<Index>(values.size())))) {}

std::vector<double> Spectrum::to_vector() const {
  return std::vector<double>(values_.data(), values_.data() + values_.size());
}

Spectrum Spectrum::desc() const {
  Spectrum out;
  out.values_ = permuted(values_, stable_order(values_, true));
  return out;
}

Spectrum Spectrum::asc() const {
  Spectrum out;
  out.values_ = permuted(values_, stable_order(values_, false));
  return out;
}

bool Spectrum::is_nonincreasing() const {
  for (Index i = 1; i < size(); ++i) {
    if (values_(i) > values_(i - 1)) return false;
  }
  return true;
}

bool Spectrum::is_nondecreasing() const {
  for (Index i = 1; i < size(); ++i) {
    if (values_(i) < values_(i - 1)) return false;
  }
  return true;
}

RVector Spectrum::partial_sums() const {
  RVector out(size());
  double acc = 0.0;
  for (Index i = 0; i < size(); ++i) {
    acc += values_(i);
    out(i) = acc;
  }
  return out;
}

Spectrum Spectrum::segment(Index begin, Index count) const {
  if (begin < 0 || count < 0 || begin + count > size()) {
    throw DimensionError("Spectrum::segment: range out of bounds");
  }
  Spectrum out;
  out.values_ = values_.segment(begin, count);
  return out;
}

Spectrum Spectrum::concat(const Spectrum& a, const Spectrum& b) {
  Spectrum out;
  out.values_.resize(a.size() + b.size());
  out.values_ << a.values_, b.values_;
  return out;
}

Spectrum operator+(const Spectrum& a, const Spectrum& b) {
  detail::require_same_size(a.size(), b.size(), "Spectrum +");
  return Spectrum(RVector(a.values() + b.values()));
}

Spectrum operator-(const Spectrum& a, const Spectrum& b) {
  detail::require_same_size(a.size(), b.size(), "Spectrum -");
  return Spectrum(RVector(a.values() - b.values()));
}

Spectrum hadamard(const Spectrum& a, const Spectrum& b) {
  detail::require_same_size(a.size(), b.size(), "hadamard");
  return Spectrum(RVector(a.values().cwiseProduct(b.values())));
}

Spectrum log(const Spectrum& x) {
  require_positive(x, "log");
  return Spectrum(RVector(x.values().array().log().matrix()));
}

Spectrum exp(const Spectrum& x) { return Spectrum(RVector(x.values().array().exp().matrix())); }

Spectrum scaled(const Spectrum& x, double factor) { return Spectrum(RVector(x.values() * factor)); }

double max_abs_diff(const Spectrum& a, const Spectrum& b) {
  detail::require_same_size(a.size(), b.size(), "max_abs_diff");
  if (a.size() == 0) return 0.0;
  return (a.values() - b.values()).cwiseAbs().maxCoeff();
}

bool approx_equal(const Spectrum& a, const Spectrum& b, double tol) {
  return a.size() == b.size() && max_abs_diff(a, b) <= tol;
}

OrderTolerance::OrderTolerance(double abs_tol) : abs_tol_(abs_tol) {
  if (!(abs_tol >= 0.0)) throw ParameterError("OrderTolerance: must be nonnegative");
}

double submajorization_slack(const Spectrum& x, const Spectrum& y) {
  detail::require_same_size(x.size(), y.size(), "submajorization");
  const RVector px = x.desc().partial_sums();
  const RVector py = y.desc().partial_sums();
  return (py - px).minCoeff();
}

double log_majorization_slack(const Spectrum& x, const Spectrum& y) {
  detail::require_same_size(x.size(), y.size(), "log_majorization");
  require_positive(x, "log_majorization");
  require_positive(y, "log_majorization");
  const RVector px = log(x.desc()).partial_sums();
  const RVector py = log(y.desc()).partial_sums();
  const Index d = x.size();
  double worst = -std::abs(py(d - 1) - px(d - 1));
  for (Index k = 0; k + 1 < d; ++k) worst = std::min(worst, py(k) - px(k));
  return worst;
}

bool submajorizes(const Spectrum& x, const Spectrum& y, OrderTolerance tol) {
  return submajorization_slack(x, y) >= -tol.abs_tol();
}

bool majorizes(const Spectrum& x, const Spectrum& y, OrderTolerance tol) {
  return submajorizes(x, y, tol) && std::abs(x.trace() - y.trace()) <= tol.abs_tol();
}

bool log_majorizes(const Spectrum& x, const Spectrum& y, OrderTolerance tol) {
  return log_majorization_slack(x, y) >= -tol.abs_tol();
}

bool log_to_weak_check(const Spectrum& x, const Spectrum& y, OrderTolerance tol) {
  if (!log_majorizes(x, y, tol)) return true;
  // A log slack of tol allows the sums to exceed by a factor e^tol.
  const double slack = std::expm1(tol.abs_tol()) * y.values().cwiseAbs().sum() + tol.abs_tol();
  return submajorizes(x, y, OrderTolerance(slack));
}

namespace {

template <typename F>
bool tracial_holds(const Spectrum& x, const Spectrum& y, F f, double tol) {
  double fx = 0.0;
  double fy = 0.0;
  for (Index i = 0; i < x.size(); ++i) {
    fx += f(x[i]);
    fy += f(y[i]);
  }
  return fx <= fy + tol * std::max(1.0, std::abs(fy));
}

}  // namespace

bool tracial_convex_check(const Spectrum& x, const Spectrum& y, ConvexFamily family,
                          OrderTolerance tol) {
  detail::require_same_size(x.size(), y.size(), "tracial_convex_check");
  const double t = tol.abs_tol();
  bool ok = true;
  if (family == ConvexFamily::kPowers || family == ConvexFamily::kAll) {
    for (int p = 1; p <= 4; ++p) {
      ok = ok && tracial_holds(x, y, [p](double v) { return std::pow(std::max(v, 0.0), p); }, t);
    }
  }
  if (family == ConvexFamily::kExp || family == ConvexFamily::kAll) {
    ok = ok && tracial_holds(x, y, [](double v) { return std::exp(v); }, t);
  }
  if (family == ConvexFamily::kHinge || family == ConvexFamily::kAll) {
    std::vector<double> knots = x.to_vector();
    const std::vector<double> ys = y.to_vector();
    knots.insert(knots.end(), ys.begin(), ys.end());
    std::sort(knots.begin(), knots.end());
    const size_t base = knots.size();
    for (size_t i = 0; i + 1 < base; ++i) knots.push_back(0.5 * (knots[i] + knots[i + 1]));
    for (double c : knots) {
      ok = ok && tracial_holds(x, y, [c](double v) { return std::max(v - c, 0.0); }, t);
    }
  }
  return ok;
}

}  // namespace framesolve
