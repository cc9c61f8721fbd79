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

#include "gptd/multicopy.hpp"

#include <algorithm>
#include <cmath>

#include "gptd/discrimination.hpp"

namespace gptd {

namespace {

bool condition_at(double x, const ClassParameter& cls) {
  return cls.is_ms() ? thm1_condition(x, x, cls.s())
                     : thm2_condition(x, x, cls.t());
}

}  // namespace

MinCopiesResult min_copies(const MultiCopyInstance& inst, std::int64_t cap) {
  if (!(inst.c >= 0.0 && inst.c < 1.0))
    throw InputError("min_copies: overlap c must lie in [0, 1)");
  if (cap < 1) throw InputError("min_copies: cap must be positive");
  if (inst.cls.is_zero())
    throw ZeroParameterError(
        "min_copies: no finite copy count exists at s = 0 (resp. t = 0)");
  if (inst.c == 0.0) return {1, 2};

  // Closed-form accelerator: the condition at x = y = c^n is c^n <= r with
  // r the interior margin. The raw condition settles the exact answer.
  const double r = interior_origin_margin(inst.cls);
  const double estimate = std::log(r) / std::log(inst.c);
  std::int64_t n = 1;
  if (estimate > 4.0)
    n = std::min<std::int64_t>(static_cast<std::int64_t>(estimate) - 3, cap);

  while (n <= cap && !condition_at(std::pow(inst.c, static_cast<double>(n)),
                                   inst.cls))
    ++n;
  if (n > cap)
    throw SearchCapExceededError("min_copies: no n up to " +
                                 std::to_string(cap) + " satisfies the condition");
  while (n > 1 &&
         condition_at(std::pow(inst.c, static_cast<double>(n - 1)), inst.cls))
    --n;
  return {n, 2 * n};
}

std::vector<RegionRow> region_boundary(const ClassParameter& cls,
                                       int grid_points) {
  if (grid_points < 2)
    throw InputError("region_boundary: grid must have at least 2 points");

  const double s = cls.s();
  const double factor = cls.is_ms() ? 4.0 * s * s : cls.t();
  std::vector<RegionRow> rows;
  rows.reserve(static_cast<std::size_t>(grid_points));
  for (int k = 0; k < grid_points; ++k) {
    const double x = static_cast<double>(k) / (grid_points - 1);
    double y = 1.0;  // the x = 0 edge is feasible for every y
    if (x > 0.0) y = factor * (1.0 - x) / (x + factor * (1.0 - x));
    rows.push_back({x, y, true});
  }
  return rows;
}

double interior_origin_margin(const ClassParameter& cls) {
  if (cls.is_ms()) {
    const double s = cls.s();
    return 2.0 * s / (1.0 + 2.0 * s);
  }
  const double root = std::sqrt(cls.t());
  return root / (1.0 + root);
}

}  // namespace gptd
