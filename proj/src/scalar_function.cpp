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

#include "framesolve/scalar_function.hpp"

#include <cmath>

namespace framesolve {

ScalarFunction ScalarFunction::parse(const std::string& name) {
  if (name == "identity") return identity();
  if (name == "square") return square();
  if (name == "sqrt") return sqrt();
  if (name == "inverse") return inverse();
  if (name == "log") return log();
  if (name == "exp") return exp();
  if (name.rfind("power:", 0) == 0) return power(std::stod(name.substr(6)));
  throw ParameterError("unknown scalar function '" + name + "'");
}

std::string ScalarFunction::name() const {
  switch (kind_) {
    case Kind::kIdentity: return "identity";
    case Kind::kSquare: return "square";
    case Kind::kSqrt: return "sqrt";
    case Kind::kInverse: return "inverse";
    case Kind::kLog: return "log";
    case Kind::kExp: return "exp";
    case Kind::kPower: return "power:" + std::to_string(power_);
  }
  return "unknown";
}

double ScalarFunction::operator()(double x) const {
  switch (kind_) {
    case Kind::kIdentity: return x;
    case Kind::kSquare: return x * x;
    case Kind::kSqrt:
      if (x < 0.0) throw DomainError("sqrt of negative value");
      return std::sqrt(x);
    case Kind::kInverse:
      if (x == 0.0) throw DomainError("inverse of zero");
      return 1.0 / x;
    case Kind::kLog:
      if (!(x > 0.0)) throw DomainError("log of nonpositive value");
      return std::log(x);
    case Kind::kExp: return std::exp(x);
    case Kind::kPower:
      if (x < 0.0 && power_ != std::floor(power_)) throw DomainError("fractional power of negative value");
      return std::pow(x, power_);
  }
  return x;
}

double ScalarFunction::trace(const Spectrum& x) const {
  double acc = 0.0;
  for (Index i = 0; i < x.size(); ++i) acc += (*this)(x[i]);
  return acc;
}

std::vector<ScalarFunction> increasing_convex_family() {
  return {ScalarFunction::identity(), ScalarFunction::square(), ScalarFunction::exp()};
}

}  // namespace framesolve
