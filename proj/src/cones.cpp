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

#include "gptd/cones.hpp"

#include <algorithm>
#include <cmath>

namespace gptd {

namespace {

void require_parameter_range(double s) {
  if (!(s >= 0.0 && s <= 0.5))
    throw InputError("ConeId: s must lie in [0, 1/2]");
}

// Weighted-sum certificates share one validation core; `sco_bound` < 0 skips
// the per-term sco check.
Verdict check_weighted_sum(const HermitianOperator& x,
                           const std::vector<WeightedVector>& terms,
                           double sco_bound) {
  const int n = x.size();
  Matrix sum = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < terms.size(); ++i) {
    const auto& term = terms[i];
    if (term.weight < 0.0)
      return Verdict::fail("term " + std::to_string(i) + " has negative weight");
    if (term.vector.size() != n)
      return Verdict::fail("term " + std::to_string(i) + " has wrong dimension");
    if (sco_bound >= 0.0) {
      const double value = sco(term.vector.with_dims(x.dims()));
      if (value > sco_bound + kScoSlack)
        return Verdict::fail("term " + std::to_string(i) + " has sco " +
                             std::to_string(value) + " above the bound " +
                             std::to_string(sco_bound));
    }
    sum.noalias() +=
        term.weight * (term.vector.amplitudes() * term.vector.amplitudes().adjoint());
  }
  const double residual = (x.matrix() - sum).cwiseAbs().maxCoeff();
  if (residual > kCertificateTol)
    return Verdict::fail("reconstruction residual " + std::to_string(residual) +
                         " exceeds tolerance");
  return Verdict::ok();
}

const std::vector<WeightedVector>* sum_terms(const ConeCertificate& cert) {
  if (const auto* psd = std::get_if<PsdSumCert>(&cert)) return &psd->terms;
  if (const auto* ks0 = std::get_if<Ks0DecompCert>(&cert)) return &ks0->terms;
  return nullptr;
}

Verdict check_sep_dual(const HermitianOperator& x, const SepDualSplitCert& cert) {
  if (cert.p.size() != x.size() || cert.q.size() != x.size())
    return Verdict::fail("split parts have wrong dimension");
  if (!is_psd(cert.p)) return Verdict::fail("P is not PSD");
  if (!is_psd(cert.q)) return Verdict::fail("Q is not PSD");
  const Matrix gamma_q = partial_transpose_matrix(
      cert.q.matrix(), x.dims().dim_a, x.dims().dim_b);
  const double residual =
      (x.matrix() - cert.p.matrix() - gamma_q).cwiseAbs().maxCoeff();
  if (residual > kCertificateTol)
    return Verdict::fail("X != P + Gamma(Q): residual " +
                         std::to_string(residual));
  return Verdict::ok();
}

Verdict check_ks_split(const HermitianOperator& x, const KsSplitCert& cert,
                       double s) {
  const int n = x.size();
  if (cert.psd_part.size() != n)
    return Verdict::fail("psd part has wrong dimension");
  if (!is_psd(cert.psd_part)) return Verdict::fail("psd part is not PSD");

  Matrix gamma_sum = Matrix::Zero(n, n);
  for (std::size_t i = 0; i < cert.gamma_part.terms.size(); ++i) {
    const auto& term = cert.gamma_part.terms[i];
    if (term.weight < 0.0)
      return Verdict::fail("gamma term " + std::to_string(i) +
                           " has negative weight");
    if (term.vector.size() != n)
      return Verdict::fail("gamma term " + std::to_string(i) +
                           " has wrong dimension");
    const double value = sco(term.vector.with_dims(x.dims()));
    if (value > s + kScoSlack)
      return Verdict::fail("gamma term " + std::to_string(i) + " has sco " +
                           std::to_string(value) + " above s = " +
                           std::to_string(s));
    gamma_sum.noalias() +=
        term.weight * (term.vector.amplitudes() * term.vector.amplitudes().adjoint());
  }
  const Matrix reconstructed =
      cert.psd_part.matrix() +
      partial_transpose_matrix(gamma_sum, x.dims().dim_a, x.dims().dim_b);
  const double residual = (x.matrix() - reconstructed).cwiseAbs().maxCoeff();
  if (residual > kCertificateTol)
    return Verdict::fail("X != psd part + Gamma(decomposition): residual " +
                         std::to_string(residual));
  return Verdict::ok();
}

}  // namespace

ConeId ConeId::ks0(double s) {
  require_parameter_range(s);
  return {ConeKind::Ks0, s};
}

ConeId ConeId::ks(double s) {
  require_parameter_range(s);
  return {ConeKind::Ks, s};
}

double nege(const HermitianOperator& x) {
  const double min_eig = min_eigenvalue(x);
  return min_eig < kNegativeEigCutoff ? -min_eig : 0.0;
}

double sco(const PureStateVector& v) {
  if (!v.dims().is_bipartite())
    throw DimensionError("sco: vector is not bipartite");
  if (v.norm() < 1e-14) return 0.0;
  const RealVector lambda = schmidt(v).coefficients;
  if (lambda.size() < 2) return 0.0;
  return lambda(0) * lambda(1);
}

RealVector ppt_pure_spectrum(const PureStateVector& v) {
  if (!v.dims().is_bipartite())
    throw DimensionError("ppt_pure_spectrum: vector is not bipartite");
  if (v.norm() < 1e-14)
    throw NormalizationError("ppt_pure_spectrum: zero vector");
  const RealVector lambda = schmidt(v).coefficients;
  const int d = static_cast<int>(lambda.size());

  std::vector<double> values;
  values.reserve(v.size());
  for (int k = 0; k < d; ++k) values.push_back(lambda(k) * lambda(k));
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      values.push_back(lambda(i) * lambda(j));
      values.push_back(-lambda(i) * lambda(j));
    }
  values.resize(v.size(), 0.0);
  std::sort(values.begin(), values.end(), std::greater<double>());

  return Eigen::Map<const RealVector>(values.data(),
                                      static_cast<Eigen::Index>(values.size()));
}

bool is_psd(const HermitianOperator& x) { return min_eigenvalue(x) >= kPsdTol; }

Verdict check_certificate(const HermitianOperator& x, const ConeId& cone,
                          const ConeCertificate& cert) {
  switch (cone.kind) {
    case ConeKind::Psd:
    case ConeKind::PovmElement: {
      const auto* terms = sum_terms(cert);
      if (!terms)
        throw CertificateError("PSD cone requires a rank-one sum certificate");
      return check_weighted_sum(x, *terms, -1.0);
    }
    case ConeKind::Sep: {
      // SEP = K_0^(0): every term must be a product vector.
      const auto* terms = sum_terms(cert);
      if (!terms)
        throw CertificateError("SEP cone requires a rank-one sum certificate");
      return check_weighted_sum(x, *terms, 0.0);
    }
    case ConeKind::SepDual: {
      if (const auto* split = std::get_if<SepDualSplitCert>(&cert))
        return check_sep_dual(x, *split);
      // PSD sum also proves block positivity (PSD is inside SEP*).
      if (const auto* terms = sum_terms(cert))
        return check_weighted_sum(x, *terms, -1.0);
      throw CertificateError(
          "SEP* cone requires a split or rank-one sum certificate");
    }
    case ConeKind::Ks0: {
      const auto* terms = sum_terms(cert);
      if (!terms)
        throw CertificateError("Ks0 cone requires a rank-one sum certificate");
      return check_weighted_sum(x, *terms, cone.s);
    }
    case ConeKind::Ks: {
      const auto* split = std::get_if<KsSplitCert>(&cert);
      if (!split) throw CertificateError("Ks cone requires a KsSplit certificate");
      return check_ks_split(x, *split, cone.s);
    }
  }
  throw CertificateError("unknown cone");
}

Verdict class_membership(const HermitianOperator& m, const ClassParameter& cls,
                         const ConeCertificate& cert) {
  if (cls.is_ms()) {
    Verdict dual;
    try {
      dual = check_certificate(m, ConeId::sep_dual(), cert);
    } catch (const CertificateError& e) {
      return Verdict::fail(e.what());
    }
    if (!dual) return dual;
    const double negativity = nege(m);
    if (negativity > cls.s() + kCertificateTol)
      return Verdict::fail("nege " + std::to_string(negativity) +
                           " exceeds s = " + std::to_string(cls.s()));
    return Verdict::ok();
  }
  try {
    return check_certificate(m, ConeId::ks(cls.s()), cert);
  } catch (const CertificateError& e) {
    return Verdict::fail(e.what());
  }
}

}  // namespace gptd
