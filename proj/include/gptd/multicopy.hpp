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

#ifndef GPTD_MULTICOPY_HPP
#define GPTD_MULTICOPY_HPP

#include <cstdint>
#include <vector>

#include "gptd/class_parameter.hpp"
#include "gptd/types.hpp"

namespace gptd {

/// Two local states sigma1, sigma2 with single-copy overlap c = Tr sigma1
/// sigma2, split n copies against n copies across the bipartition so that
/// x = y = c^n.
struct MultiCopyInstance {
  double c = 0.0;  // in [0, 1)
  ClassParameter cls;
};

struct MinCopiesResult {
  std::int64_t n = 0;
  std::int64_t total_copies = 0;  // 2n
};

inline constexpr std::int64_t kDefaultCopySearchCap = 1000000;

/// Smallest n with x = y = c^n satisfying the class condition. Uses the
/// closed-form threshold c^n <= 2s/(1+2s) (resp. sqrt(t)/(1+sqrt(t))) as an
/// accelerator, then settles the answer against the raw condition. Throws
/// ZeroParameterError when s = 0 (resp. t = 0) and SearchCapExceededError
/// when no n <= cap works.
MinCopiesResult min_copies(const MultiCopyInstance& inst,
                           std::int64_t cap = kDefaultCopySearchCap);

/// One grid point of the feasibility boundary: the class condition holds at
/// (x, y) exactly when y <= y_boundary.
struct RegionRow {
  double x = 0.0;
  double y_boundary = 0.0;
  bool feasible_below = true;
};

/// Uniform grid over x in [0, 1] (endpoints included) with
///   y_boundary = 4 s^2 (1-x) / (x + 4 s^2 (1-x))    for Ms,
///   y_boundary = t (1-x) / (x + t (1-x))            for MKs;
/// x = 0 emits y_boundary = 1 (the whole edge is feasible). Requires
/// grid_points >= 2.
std::vector<RegionRow> region_boundary(const ClassParameter& cls,
                                       int grid_points);

/// Largest r such that the square [0, r]^2 lies inside the feasible region;
/// solves r = 2s(1-r) (resp. r = sqrt(t)(1-r)). Zero at s = 0.
double interior_origin_margin(const ClassParameter& cls);

}  // namespace gptd

#endif  // GPTD_MULTICOPY_HPP
