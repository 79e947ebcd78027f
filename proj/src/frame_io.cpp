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

#include "framesolve/frame_io.hpp"

#include <fstream>
#include <sstream>

namespace framesolve {

namespace {

using nlohmann::json;

json complex_to_json(const Complex& z) { return json::array({z.real(), z.imag()}); }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InputError("expected a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

json frame_to_json(const Frame& f) {
  json vectors = json::array();
  for (Index i = 0; i < f.size(); ++i) {
    json v = json::array();
    for (Index r = 0; r < f.dim(); ++r) v.push_back(complex_to_json(f.synthesis()(r, i)));
    vectors.push_back(std::move(v));
  }
  return json{{"d", f.dim()}, {"n", f.size()}, {"vectors", std::move(vectors)}};
}

Frame frame_from_json(const json& j) {
  try {
    if (!j.is_object()) throw InputError("frame: expected a JSON object");
    const Index d = j.at("d").get<Index>();
    const Index n = j.at("n").get<Index>();
    const json& vectors = j.at("vectors");
    if (d < 1 || n < 1) throw InputError("frame: d and n must be positive");
    if (!vectors.is_array() || static_cast<Index>(vectors.size()) != n) {
      throw InputError("frame: 'vectors' must hold n entries");
    }
    CMatrix m(d, n);
    for (Index i = 0; i < n; ++i) {
      const json& v = vectors[static_cast<size_t>(i)];
      if (!v.is_array() || static_cast<Index>(v.size()) != d) {
        throw InputError("frame: vector " + std::to_string(i) + " must have d entries");
      }
      for (Index r = 0; r < d; ++r) m(r, i) = complex_from_json(v[static_cast<size_t>(r)]);
    }
    return Frame(std::move(m));
  } catch (const json::exception& e) {
    throw InputError(std::string("frame: ") + e.what());
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
}

Frame read_frame_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open frame file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw InputError("cannot parse frame file '" + path + "': " + e.what());
  }
  return frame_from_json(j);
}

json matrix_to_json(const CMatrix& m) {
  json rows = json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(complex_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty() || !j[0].is_array()) throw InputError("matrix: expected rows");
  const Index rows = static_cast<Index>(j.size());
  const Index cols = static_cast<Index>(j[0].size());
  CMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    const json& row = j[static_cast<size_t>(r)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols) throw InputError("matrix: ragged rows");
    for (Index c = 0; c < cols; ++c) m(r, c) = complex_from_json(row[static_cast<size_t>(c)]);
  }
  return m;
}

json spectrum_to_json(const Spectrum& s) { return s.to_vector(); }

}  // namespace framesolve
