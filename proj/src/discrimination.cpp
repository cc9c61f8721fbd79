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

#include "gptd/discrimination.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace gptd {

namespace {

void require_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0))
    throw InputError(std::string(name) + " must lie in [0, 1]");
}

// Embeds a vector on the canonical 2 (x) 2 block into the full space: block
// index (iA, iB) with iA, iB in {0, 1} maps to iA * dB + iB.
Vector embed_vector(const Vector& block, int d_a, int d_b) {
  Vector full = Vector::Zero(static_cast<Eigen::Index>(d_a) * d_b);
  for (int ia = 0; ia < 2; ++ia)
    for (int ib = 0; ib < 2; ++ib) full(ia * d_b + ib) = block(2 * ia + ib);
  return full;
}

Matrix embed_matrix(const Matrix& block, int d_a, int d_b) {
  Matrix full = Matrix::Zero(static_cast<Eigen::Index>(d_a) * d_b,
                             static_cast<Eigen::Index>(d_a) * d_b);
  for (int ia = 0; ia < 2; ++ia)
    for (int ib = 0; ib < 2; ++ib)
      for (int ja = 0; ja < 2; ++ja)
        for (int jb = 0; jb < 2; ++jb)
          full(ia * d_b + ib, ja * d_b + jb) = block(2 * ia + ib, 2 * ja + jb);
  return full;
}

ConeCertificate make_evidence(const HermitianOperator& t,
                              const std::vector<WeightedVector>& terms,
                              const ClassParameter& cls) {
  if (cls.is_ms()) return SepDualSplitCert{t, t};
  return KsSplitCert{t, Ks0DecompCert{terms}};
}

// Local projective POVM for exactly discriminable (orthogonal) local parts:
// M1 projects onto the first canonical basis vector of the orthogonal side,
// M2 takes the rest of the identity. T_i = M_i / 2 is Gamma-invariant.
MeasurementCertificate build_trivial(const CanonicalForm& cf,
                                     const ClassParameter& cls,
                                     bool orthogonal_on_a) {
  const int d_a = cf.dim_a();
  const int d_b = cf.dim_b();
  const SystemDims dims = cf.dims();
  const int n = dims.total();

  Matrix m1 = Matrix::Zero(n, n);
  std::vector<WeightedVector> terms1;
  std::vector<WeightedVector> terms2;
  for (int ia = 0; ia < d_a; ++ia)
    for (int ib = 0; ib < d_b; ++ib) {
      const bool first_outcome = orthogonal_on_a ? (ia == 0) : (ib == 0);
      const int idx = ia * d_b + ib;
      if (first_outcome) m1(idx, idx) = 1.0;
      auto& terms = first_outcome ? terms1 : terms2;
      terms.push_back({0.5, PureStateVector::basis_state(dims, idx)});
    }

  HermitianOperator t1(0.5 * m1, dims);
  HermitianOperator t2(0.5 * (Matrix::Identity(n, n) - m1), dims);
  ConeCertificate ev1 = make_evidence(t1, terms1, cls);
  ConeCertificate ev2 = make_evidence(t2, terms2, cls);
  return MeasurementCertificate{cls,
                                Branch::TrivialOrthogonal,
                                std::move(t1),
                                std::move(t2),
                                std::move(terms1),
                                std::move(terms2),
                                std::nullopt,
                                std::nullopt,
                                std::move(ev1),
                                std::move(ev2)};
}

MeasurementCertificate build_gamma_one(const CanonicalForm& cf,
                                       const ClassParameter& cls) {
  const int d_a = cf.dim_a();
  const int d_b = cf.dim_b();
  const SystemDims dims = cf.dims();

  Vector v1(4), v2(4);
  v1 << 1.0, 0.0, 0.0, -1.0;
  v2 << 0.0, 1.0, 1.0, 0.0;
  const Vector u1 = embed_vector(v1, d_a, d_b);
  const Vector u2 = embed_vector(v2, d_a, d_b);

  std::vector<WeightedVector> terms1{{0.5, PureStateVector(u1, dims)}};
  std::vector<WeightedVector> terms2{{0.5, PureStateVector(u2, dims)}};

  Matrix t2_full = 0.5 * (u2 * u2.adjoint());
  // Identity completion outside the canonical block goes to T2.
  for (int ia = 0; ia < d_a; ++ia)
    for (int ib = 0; ib < d_b; ++ib)
      if (ia >= 2 || ib >= 2) {
        const int idx = ia * d_b + ib;
        t2_full(idx, idx) += 0.5;
        terms2.push_back({0.5, PureStateVector::basis_state(dims, idx)});
      }

  HermitianOperator t1(0.5 * (u1 * u1.adjoint()), dims);
  HermitianOperator t2(std::move(t2_full), dims);
  ConeCertificate ev1 = make_evidence(t1, terms1, cls);
  ConeCertificate ev2 = make_evidence(t2, terms2, cls);
  return MeasurementCertificate{cls,
                                Branch::GammaEqualsOne,
                                std::move(t1),
                                std::move(t2),
                                std::move(terms1),
                                std::move(terms2),
                                std::nullopt,
                                std::nullopt,
                                std::move(ev1),
                                std::move(ev2)};
}

MeasurementCertificate build_gamma_greater(const CanonicalForm& cf,
                                           const ClassParameter& cls) {
  const int d_a = cf.dim_a();
  const int d_b = cf.dim_b();
  const SystemDims dims = cf.dims();
  const double a1 = cf.alpha1;
  const double a2 = cf.alpha2;
  const double g = cf.gamma;
  const double xi = *cf.xi;

  Vector v1(4), v2(4), v3(4);
  v1 << 1.0, 0.0, 0.0, -xi;                          // e0 (x) e0 - xi e1 (x) e1
  v2 << 0.0, 1.0, 0.0, -cf.beta1 / a1;               // (1, -b1/a1) (x) (0, 1)
  v3 << 0.0, 0.0, 1.0, -cf.beta2 / a2;               // (0, 1) (x) (1, -b2/a2)

  const double w_main = 0.5;
  const double w_side = (g - 1.0) / (2.0 * g);
  Matrix t1_block = w_main * (v1 * v1.adjoint()) +
                    w_side * (v2 * v2.adjoint()) + w_side * (v3 * v3.adjoint());

  Matrix u_a(2, 2), u_b(2, 2);
  u_a << cf.beta1, a1, a1, -cf.beta1;
  u_a /= std::sqrt(a1);
  u_b << cf.beta2, a2, a2, -cf.beta2;
  u_b /= std::sqrt(a2);
  const Matrix w = kron_matrix(u_a, u_b);
  const Matrix t2_block = w * t1_block * w.adjoint();

  std::vector<WeightedVector> terms1;
  std::vector<WeightedVector> terms2;
  const double weights[] = {w_main, w_side, w_side};
  const Vector* vecs[] = {&v1, &v2, &v3};
  for (int k = 0; k < 3; ++k) {
    terms1.push_back(
        {weights[k], PureStateVector(embed_vector(*vecs[k], d_a, d_b), dims)});
    terms2.push_back({weights[k], PureStateVector(embed_vector(w * *vecs[k],
                                                               d_a, d_b),
                                                  dims)});
  }

  Matrix t2_full = embed_matrix(t2_block, d_a, d_b);
  for (int ia = 0; ia < d_a; ++ia)
    for (int ib = 0; ib < d_b; ++ib)
      if (ia >= 2 || ib >= 2) {
        const int idx = ia * d_b + ib;
        t2_full(idx, idx) += 0.5;
        terms2.push_back({0.5, PureStateVector::basis_state(dims, idx)});
      }

  HermitianOperator t1(embed_matrix(t1_block, d_a, d_b), dims);
  HermitianOperator t2(std::move(t2_full), dims);
  ConeCertificate ev1 = make_evidence(t1, terms1, cls);
  ConeCertificate ev2 = make_evidence(t2, terms2, cls);
  return MeasurementCertificate{cls,
                                Branch::GammaGreater,
                                std::move(t1),
                                std::move(t2),
                                std::move(terms1),
                                std::move(terms2),
                                Matrix(u_a),
                                Matrix(u_b),
                                std::move(ev1),
                                std::move(ev2)};
}

}  // namespace

const char* branch_label(Branch branch) {
  switch (branch) {
    case Branch::GammaGreater: return "gamma_greater";
    case Branch::GammaEqualsOne: return "gamma_equals_one";
    case Branch::TrivialOrthogonal: return "trivial_orthogonal";
  }
  throw Error("unknown branch");
}

Branch branch_from_label(const std::string& label) {
  if (label == "gamma_greater") return Branch::GammaGreater;
  if (label == "gamma_equals_one") return Branch::GammaEqualsOne;
  if (label == "trivial_orthogonal") return Branch::TrivialOrthogonal;
  throw InputError("unknown branch tag: " + label);
}

HermitianOperator MeasurementCertificate::m1() const {
  return HermitianOperator(
      t1.matrix() + partial_transpose_matrix(t1.matrix(), t1.dims().dim_a,
                                             t1.dims().dim_b),
      t1.dims());
}

HermitianOperator MeasurementCertificate::m2() const {
  return HermitianOperator(
      t2.matrix() + partial_transpose_matrix(t2.matrix(), t2.dims().dim_a,
                                             t2.dims().dim_b),
      t2.dims());
}

bool thm1_condition(double x, double y, double s) {
  require_unit_interval(x, "x");
  require_unit_interval(y, "y");
  if (!(s >= 0.0 && s <= 0.5)) throw InputError("s must lie in [0, 1/2]");
  return x * y <= 4.0 * s * s * (1.0 - x) * (1.0 - y) + kConditionSlack;
}

bool thm2_condition(double x, double y, double t) {
  require_unit_interval(x, "x");
  require_unit_interval(y, "y");
  if (!(t >= 0.0 && t <= 1.0)) throw InputError("t must lie in [0, 1]");
  return x * y <= t * (1.0 - x) * (1.0 - y) + kConditionSlack;
}

bool class_condition(const OverlapPair& xy, const ClassParameter& cls) {
  return cls.is_ms() ? thm1_condition(xy.x, xy.y, cls.s())
                     : thm2_condition(xy.x, xy.y, cls.t());
}

MeasurementCertificate build_measurement(const CanonicalForm& cf,
                                         const ClassParameter& cls) {
  if (!class_condition({cf.x(), cf.y()}, cls))
    throw ConditionNotSatisfiedError(
        "the sufficient condition does not hold at x = " +
        std::to_string(cf.x()) + ", y = " + std::to_string(cf.y()));

  if (cf.alpha1 >= 1.0 - kBranchTol) return build_trivial(cf, cls, true);
  if (cf.alpha2 >= 1.0 - kBranchTol) return build_trivial(cf, cls, false);
  if (std::abs(cf.gamma - 1.0) <= kBranchTol) return build_gamma_one(cf, cls);
  return build_gamma_greater(cf, cls);
}

VerificationReport verify_measurement(const MeasurementCertificate& cert,
                                      const HermitianOperator& rho1,
                                      const HermitianOperator& rho2,
                                      const ClassParameter& cls) {
  if (cert.t1.dims() != rho1.dims() || cert.t2.dims() != rho2.dims() ||
      rho1.dims() != rho2.dims())
    throw DimensionError("verify_measurement: dimension mismatch");

  const HermitianOperator m1 = cert.m1();
  const HermitianOperator m2 = cert.m2();
  const int n = m1.size();

  VerificationReport report;
  report.unit_residual =
      (m1.matrix() + m2.matrix() - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  report.unit_ok = report.unit_residual <= kCertificateTol;

  auto check_element = [&](const HermitianOperator& m,
                           const std::vector<WeightedVector>& terms,
                           const ConeCertificate& evidence) {
    ElementCheck check;
    check.nege_value = nege(m);
    for (const auto& term : terms)
      check.max_term_sco =
          std::max(check.max_term_sco, sco(term.vector.with_dims(m.dims())));
    check.membership = class_membership(m, cls, evidence);
    return check;
  };
  report.element1 = check_element(m1, cert.terms1, cert.evidence1);
  report.element2 = check_element(m2, cert.terms2, cert.evidence2);
  report.cone_ok =
      report.element1.membership.valid && report.element2.membership.valid;

  const double cross1 = std::abs((rho1.matrix() * m2.matrix()).trace());
  const double cross2 = std::abs((rho2.matrix() * m1.matrix()).trace());
  report.zero_error_residual = std::max(cross1, cross2);
  report.zero_error_ok = report.zero_error_residual <= kCertificateTol;
  return report;
}

DiscriminationResult discriminate(const CanonicalForm& cf,
                                  const ClassParameter& cls) {
  DiscriminationResult result;
  result.overlaps = {cf.x(), cf.y()};
  result.canonical = cf;

  if (!class_condition(result.overlaps, cls)) {
    result.reason = "the sufficient condition does not hold at these overlaps";
    return result;
  }

  result.certificate = build_measurement(cf, cls);
  const HermitianOperator rho1 = cf.rho1_canonical();
  const HermitianOperator rho2 = cf.rho2_canonical();
  result.report = verify_measurement(*result.certificate, rho1, rho2, cls);

  const HermitianOperator m1 = result.certificate->m1();
  const HermitianOperator m2 = result.certificate->m2();
  std::array<std::array<double, 2>, 2> probs{};
  const HermitianOperator* rhos[] = {&rho1, &rho2};
  const HermitianOperator* elements[] = {&m1, &m2};
  double prob_residual = 0.0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      probs[i][j] = (rhos[i]->matrix() * elements[j]->matrix()).trace().real();
      const double target = i == j ? 1.0 : 0.0;
      prob_residual = std::max(prob_residual, std::abs(probs[i][j] - target));
    }
  result.probabilities = probs;

  if (!result.report->pass()) {
    result.reason = "verification of the constructed measurement failed";
    return result;
  }
  if (prob_residual > kCertificateTol) {
    result.reason = "outcome probabilities deviate from the identity pattern";
    return result;
  }
  result.guaranteed = true;
  return result;
}

DiscriminationResult discriminate(const PureStateVector& a1,
                                  const PureStateVector& a2,
                                  const PureStateVector& b1,
                                  const PureStateVector& b2,
                                  const ClassParameter& cls) {
  return discriminate(canonical_reduction(a1, a2, b1, b2), cls);
}

}  // namespace gptd
