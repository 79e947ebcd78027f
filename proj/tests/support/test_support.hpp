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

#ifndef FRAMESOLVE_TESTS_TEST_SUPPORT_HPP_
#define FRAMESOLVE_TESTS_TEST_SUPPORT_HPP_

#include <initializer_list>

#include "framesolve/frame.hpp"

namespace framesolve::testing {

/// Real matrix from rows.
inline CMatrix cmat(std::initializer_list<std::initializer_list<double>> rows) {
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

/// Frame from a list of real vectors.
inline Frame real_frame(std::initializer_list<std::initializer_list<double>> vectors) {
  const Index n = static_cast<Index>(vectors.size());
  const Index d = static_cast<Index>(vectors.begin()->size());
  CMatrix m(d, n);
  Index j = 0;
  for (const auto& v : vectors) {
    Index i = 0;
    for (double x : v) m(i++, j) = x;
    ++j;
  }
  return Frame(m);
}

/// {e1, e2, e1} in C^2.
inline Frame e1e2e1() { return real_frame({{1, 0}, {0, 1}, {1, 0}}); }

inline double dist(const CMatrix& a, const CMatrix& b) { return (a - b).norm(); }

}  // namespace framesolve::testing

#endif  // FRAMESOLVE_TESTS_TEST_SUPPORT_HPP_
