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

#ifndef GPTD_DISCRIMINATION_HPP
#define GPTD_DISCRIMINATION_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "gptd/class_parameter.hpp"
#include "gptd/cones.hpp"
#include "gptd/linalg.hpp"
#include "gptd/types.hpp"

namespace gptd {

/// Local overlaps x = Tr rho1^A rho2^A, y = Tr rho1^B rho2^B. In canonical
/// form x = 1 - alpha1 and y = 1 - alpha2.
struct OverlapPair {
  double x = 0.0;
  double y = 0.0;
};

enum class Branch { GammaGreater, GammaEqualsOne, TrivialOrthogonal };

/// Stable lowercase tag ("gamma_greater", "gamma_equals_one",
/// "trivial_orthogonal") used in serialized output.
const char* branch_label(Branch branch);
Branch branch_from_label(const std::string& label);

/// The constructed two-outcome measurement, expressed in the canonical frame
/// of the instance it was built for. M_i = T_i + Gamma(T_i); rank-one terms
/// reconstruct each T_i; cone evidence proves class membership of each M_i.
struct MeasurementCertificate {
  ClassParameter cls;
  Branch branch = Branch::GammaGreater;
  HermitianOperator t1;
  HermitianOperator t2;
  std::vector<WeightedVector> terms1;  // T1 = sum w |v><v|
  std::vector<WeightedVector> terms2;
  std::optional<Matrix> unitary_a;  // GammaGreater only: T2 = (U_A (x) U_B) T1 (..)^dagger
  std::optional<Matrix> unitary_b;
  ConeCertificate evidence1;
  ConeCertificate evidence2;

  HermitianOperator m1() const;
  HermitianOperator m2() const;
};

/// Per-element outcome of the cone condition (ii).
struct ElementCheck {
  double nege_value = 0.0;    // nege(M_i)
  double max_term_sco = 0.0;  // largest sco over the element's rank-one terms
  Verdict membership;
};

/// Result of checking conditions (i)-(iii) against a state pair.
///   (i)   M1 + M2 = I            -> unit_ok, unit_residual
///   (ii)  class membership of M1, M2 -> cone_ok, element1/element2
///   (iii) Tr rho1 M2 = Tr rho2 M1 = 0 -> zero_error_ok, zero_error_residual
struct VerificationReport {
  bool unit_ok = false;
  bool cone_ok = false;
  bool zero_error_ok = false;
  double unit_residual = 0.0;        // max-entry |M1 + M2 - I|
  double zero_error_residual = 0.0;  // max(|Tr rho1 M2|, |Tr rho2 M1|)
  ElementCheck element1;
  ElementCheck element2;

  bool pass() const { return unit_ok && cone_ok && zero_error_ok; }
};

struct DiscriminationResult {
  bool guaranteed = false;
  OverlapPair overlaps;
  std::string reason;  // set when guaranteed is false
  std::optional<CanonicalForm> canonical;
  std::optional<MeasurementCertificate> certificate;
  std::optional<VerificationReport> report;
  /// probabilities[i][j] = <rho_{i+1}, M_{j+1}>; identity when guaranteed.
  std::optional<std::array<std::array<double, 2>, 2>> probabilities;
};

/// Sufficient condition for M_s: xy <= 4 s^2 (1-x)(1-y), with 1e-12 slack.
/// Throws InputError when x, y lie outside [0,1] or s outside [0, 1/2].
bool thm1_condition(double x, double y, double s);

/// Sufficient condition for M(K_s): xy <= t (1-x)(1-y), with 1e-12 slack.
/// Throws InputError when x, y lie outside [0,1] or t outside [0,1].
bool thm2_condition(double x, double y, double t);

/// Dispatches to thm1_condition (Ms, at its s) or thm2_condition (MKs, at
/// its t) for the overlaps of a canonical form.
bool class_condition(const OverlapPair& xy, const ClassParameter& cls);

/// Builds the two-outcome measurement for a canonical-form instance whose
/// class condition holds. Branches:
///   alpha_i = 1 (within 1e-9)  -> TrivialOrthogonal: local projective POVM.
///   |gamma - 1| <= 1e-9        -> GammaEqualsOne: fixed 4x4 matrices.
///   otherwise (gamma > 1)      -> GammaGreater: T1 from v1, v2, v3 and
///                                 T2 = (U_A (x) U_B) T1 (U_A (x) U_B)^dagger.
/// Blocks beyond the canonical 2x2 factors receive (I - Pi)/2 on T2 so that
/// M1 + M2 = I holds on the full space. Throws ConditionNotSatisfiedError
/// when the class condition fails.
MeasurementCertificate build_measurement(const CanonicalForm& cf,
                                         const ClassParameter& cls);

/// Checks conditions (i)-(iii) for a certificate against a state pair given
/// in the same frame as the certificate. Failures are report entries, never
/// exceptions.
VerificationReport verify_measurement(const MeasurementCertificate& cert,
                                      const HermitianOperator& rho1,
                                      const HermitianOperator& rho2,
                                      const ClassParameter& cls);

/// End-to-end pipeline: canonical reduction, class condition, construction,
/// verification, and the outcome-probability check <rho_i, M_j> = delta_ij.
/// guaranteed is true only when every check passes. Certificate and report
/// refer to the canonical frame recorded in `canonical`. Throws
/// IdenticalStatesError when both state pairs are parallel.
DiscriminationResult discriminate(const PureStateVector& a1,
                                  const PureStateVector& a2,
                                  const PureStateVector& b1,
                                  const PureStateVector& b2,
                                  const ClassParameter& cls);

/// Same pipeline starting from an already-reduced instance.
DiscriminationResult discriminate(const CanonicalForm& cf,
                                  const ClassParameter& cls);

}  // namespace gptd

#endif  // GPTD_DISCRIMINATION_HPP
