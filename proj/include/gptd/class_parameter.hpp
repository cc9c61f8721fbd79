// Copyright 2026 The gptd authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef GPTD_CLASS_PARAMETER_HPP
#define GPTD_CLASS_PARAMETER_HPP

#include <cmath>
#include <string>

#include "gptd/types.hpp"

namespace gptd {

/// Which measurement class is targeted. M_s is parameterized by the
/// negativity budget s in [0, 1/2]; M(K_s) is parameterized by the Schmidt
/// budget t in [0, 1], with the induced negativity bound s = sqrt(t)/(1+t).
class ClassParameter {
public:
  enum class Kind { Ms, MKs };

  static ClassParameter ms(double s) {
    if (!(s >= 0.0 && s <= 0.5))
      throw InputError("ClassParameter: s must lie in [0, 1/2]");
    return ClassParameter(Kind::Ms, s);
  }

  static ClassParameter mks(double t) {
    if (!(t >= 0.0 && t <= 1.0))
      throw InputError("ClassParameter: t must lie in [0, 1]");
    return ClassParameter(Kind::MKs, t);
  }

  Kind kind() const { return kind_; }
  bool is_ms() const { return kind_ == Kind::Ms; }

  /// The negativity bound: the stored s for Ms, sqrt(t)/(1+t) for M(K_s).
  double s() const {
    return is_ms() ? value_ : std::sqrt(value_) / (1.0 + value_);
  }

  /// The Schmidt budget t; only meaningful for M(K_s).
  double t() const {
    if (is_ms()) throw Error("ClassParameter: t is undefined for M_s");
    return value_;
  }

  /// True when the class degenerates to plain POVMs (s = 0, resp. t = 0).
  bool is_zero() const { return value_ == 0.0; }

  std::string label() const { return is_ms() ? "ms" : "mks"; }

  friend bool operator==(const ClassParameter&, const ClassParameter&) = default;

private:
  ClassParameter(Kind kind, double value) : kind_(kind), value_(value) {}

  Kind kind_;
  double value_;
};

}  // namespace gptd

#endif  // GPTD_CLASS_PARAMETER_HPP
