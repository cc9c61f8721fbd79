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

#ifndef GPTD_ORACLE_HPP
#define GPTD_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gptd/class_parameter.hpp"
#include "gptd/linalg.hpp"
#include "gptd/types.hpp"

namespace gptd {

struct SeesawConfig {
  int restarts = 64;
  int max_iters = 1000;
  double convergence_tol = 1e-12;
  std::uint64_t seed = 0;
};

struct ProductMinResult {
  double value = 0.0;
  PureStateVector witness_a;
  PureStateVector witness_b;
};

/// One descent from a fixed product start. objective_history records
/// <a(x)b|M|a(x)b> after every half-step and is nonincreasing.
struct SeesawTrace {
  double value = 0.0;
  PureStateVector witness_a;
  PureStateVector witness_b;
  std::vector<double> objective_history;
};

SeesawTrace seesaw_descend(const HermitianOperator& m,
                           const PureStateVector& a0,
                           const PureStateVector& b0, int max_iters,
                           double convergence_tol);

/// Block-positivity falsifier: alternating minimum-eigenvector descent over
/// product states <a(x)b|M|a(x)b>, restarted from seeded Haar-random pairs.
/// The result is an upper bound on the true product minimum; value < -1e-9
/// certifies M outside SEP(A;B)* with the returned witnesses, value >= 0 is
/// inconclusive. Restart streams are derived from (seed, restart index), so
/// the outcome does not depend on evaluation order.
ProductMinResult min_product_expectation(const HermitianOperator& m,
                                         const SeesawConfig& cfg);

/// Linear scan n = 1..cap of the raw class inequality at x = y = c^n
/// (no tolerance slack, unlike thm1_condition/thm2_condition). Returns the
/// first satisfying n, or nullopt when none exists up to the cap.
std::optional<std::int64_t> scan_min_copies(double c, const ClassParameter& cls,
                                            std::int64_t cap);

/// One audited pipeline run on a random feasible canonical form.
struct AuditInstance {
  int index = 0;
  std::string class_label;   // "ms" or "mks"
  double parameter = 0.0;    // s for ms, t for mks
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double x = 0.0;
  double y = 0.0;
  std::string branch;
  double unit_residual = 0.0;
  double zero_error_residual = 0.0;
  double nege1 = 0.0;
  double nege2 = 0.0;
  double max_sco1 = 0.0;
  double max_sco2 = 0.0;
  double seesaw1 = 0.0;  // min product expectation found for M1
  double seesaw2 = 0.0;
  double probability_residual = 0.0;  // max |<rho_i, M_j> - delta_ij|
  std::vector<std::string> failures;  // empty iff the instance passed

  bool pass() const { return failures.empty(); }
};

struct AuditReport {
  std::uint64_t seed = 0;
  int count = 0;
  std::vector<AuditInstance> instances;

  int failure_count() const;
  /// One JSON object per line, one line per instance; byte-deterministic
  /// for a fixed seed.
  std::string to_json_lines() const;
};

/// Generates `count` random canonical forms satisfying the sampled class's
/// condition, runs the full construction/verification pipeline on each, and
/// attacks every produced element with the see-saw falsifier (flagging any
/// product expectation below -1e-7). count must be >= 1.
AuditReport randomized_cert_audit(int count, std::uint64_t seed);

}  // namespace gptd

#endif  // GPTD_ORACLE_HPP
