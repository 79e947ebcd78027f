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

#ifndef FRAMESOLVE_FRAME_IO_HPP_
#define FRAMESOLVE_FRAME_IO_HPP_

#include <string>

#include <json.hpp>

#include "framesolve/frame.hpp"

namespace framesolve {

// Frame files: {"d": int, "n": int, "vectors": [[[re, im], ... d], ... n]}.
// Matrices are row-major nested arrays of [re, im] pairs.

nlohmann::json frame_to_json(const Frame& f);

/// Throws InputError on a schema violation.
Frame frame_from_json(const nlohmann::json& j);

/// Throws InputError when the file cannot be read or parsed.
Frame read_frame_file(const std::string& path);

nlohmann::json matrix_to_json(const CMatrix& m);
CMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json spectrum_to_json(const Spectrum& s);

}  // namespace framesolve

#endif  // FRAMESOLVE_FRAME_IO_HPP_
