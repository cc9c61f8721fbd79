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

#ifndef GPTD_CONES_HPP
#define GPTD_CONES_HPP

#include <string>
#include <variant>
#include <vector>

#include "gptd/class_parameter.hpp"
#include "gptd/linalg.hpp"
#include "gptd/types.hpp"

namespace gptd {

/// The cones membership can be certified against. Ks0 and Ks carry the
/// parameter s in [0, 1/2].
enum class ConeKind { Psd, Sep, SepDual, Ks0, Ks, PovmElement };

struct ConeId {
  ConeKind kind;
  double s = 0.0;  // meaningful for Ks0 and Ks only

  static ConeId psd() { return {ConeKind::Psd}; }
  static ConeId sep() { return {ConeKind::Sep}; }
  static ConeId sep_dual() { return {ConeKind::SepDual}; }
  static ConeId ks0(double s);
  static ConeId ks(double s);
  static ConeId povm_element() { return {ConeKind::PovmElement}; }
};

/// One term of a rank-one decomposition sum_i w_i |v_i><v_i|. Vectors are
/// stored as given (not normalized); weights must be nonnegative.
struct WeightedVector {
  double weight = 0.0;
  PureStateVector vector;
};

/// X = sum_i w_i |v_i><v_i| with w_i >= 0; proves PSD membership (and SEP
/// membership when every v_i is a product vector).
struct PsdSumCert {
  std::vector<WeightedVector> terms;
};

/// X = P + Gamma(Q) with P, Q PSD; proves SEP(A;B)* (block-positive)
/// membership since <a(x)b|Gamma(Q)|a(x)b> = <a(x)conj(b)|Q|a(x)conj(b)>.
struct SepDualSplitCert {
  HermitianOperator p;
  HermitianOperator q;
};

/// X = sum_i w_i |v_i><v_i| with w_i >= 0 and sco(v_i) <= s for every term;
/// proves K_s^(0) membership.
struct Ks0DecompCert {
  std::vector<WeightedVector> terms;
};

/// X = psd_part + Gamma(sum of gamma_part) with psd_part PSD and gamma_part
/// a valid K_s^(0) decomposition; proves K_s membership.
struct KsSplitCert {
  HermitianOperator psd_part;
  Ks0DecompCert gamma_part;
};

using ConeCertificate =
    std::variant<PsdSumCert, SepDualSplitCert, Ks0DecompCert, KsSplitCert>;

struct Verdict {
  bool valid = false;
  std::string reason;  // empty when valid

  static Verdict ok() { return {true, {}}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return valid; }
};

/// |most negative eigenvalue| of X, or 0 when no eigenvalue lies below the
/// noise cutoff kNegativeEigCutoff.
double nege(const HermitianOperator& x);

/// Product of the two largest Schmidt coefficients of v/||v||; 0 for the
/// zero vector and for vectors with no second Schmidt coefficient.
double sco(const PureStateVector& v);

/// Eigenvalues of Gamma(|v><v|)/||v||^2 in closed form: the multiset
/// { +-lambda_i lambda_j : i < j } union { lambda_k^2 }, zero-padded to the
/// full matrix dimension. Returned in descending order.
RealVector ppt_pure_spectrum(const PureStateVector& v);

/// Minimum eigenvalue >= -1e-10.
bool is_psd(const HermitianOperator& x);

/// Validates `cert` as a membership proof of X in the given cone.
/// Reconstruction tolerance is kCertificateTol in max-entry norm; Ks0 terms
/// get a sco slack of 1e-10. A variant/cone mismatch throws CertificateError;
/// all other failures come back as an invalid verdict with a reason.
Verdict check_certificate(const HermitianOperator& x, const ConeId& cone,
                          const ConeCertificate& cert);

/// Class membership of a single measurement element. For M_s: the
/// certificate must prove SEP(A;B)* membership (PsdSum or SepDualSplit) and
/// nege(M) must not exceed s + 1e-9. For M(K_s): the certificate must be a
/// valid KsSplit at the class's s.
Verdict class_membership(const HermitianOperator& m, const ClassParameter& cls,
                         const ConeCertificate& cert);

}  // namespace gptd

#endif  // GPTD_CONES_HPP
