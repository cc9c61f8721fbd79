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

#include "gptd/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>

namespace gptd {

namespace {

double hermiticity_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

}  // namespace

HermitianOperator::HermitianOperator(Matrix entries, SystemDims dims)
    : entries_(std::move(entries)), dims_(dims) {
  if (entries_.rows() != entries_.cols())
    throw DimensionError("HermitianOperator: matrix is not square");
  if (entries_.rows() != dims_.total())
    throw DimensionError("HermitianOperator: matrix side does not match dims");
  if (entries_.size() > 0 && hermiticity_defect(entries_) > kHermitianTol)
    throw NotHermitianError("HermitianOperator: Hermiticity defect exceeds 1e-12");
}

HermitianOperator HermitianOperator::identity(SystemDims dims) {
  return HermitianOperator(Matrix::Identity(dims.total(), dims.total()), dims);
}

HermitianOperator HermitianOperator::zero(SystemDims dims) {
  return HermitianOperator(Matrix::Zero(dims.total(), dims.total()), dims);
}

HermitianOperator HermitianOperator::with_dims(SystemDims dims) const {
  if (dims.total() != dims_.total())
    throw DimensionError("with_dims: total dimension must be preserved");
  return HermitianOperator(entries_, dims);
}

PureStateVector::PureStateVector(Vector amplitudes, SystemDims dims)
    : amplitudes_(std::move(amplitudes)), dims_(dims) {
  if (amplitudes_.size() != dims_.total())
    throw DimensionError("PureStateVector: length does not match dims");
}

PureStateVector PureStateVector::basis_state(SystemDims dims, int index) {
  if (index < 0 || index >= dims.total())
    throw DimensionError("basis_state: index out of range");
  Vector v = Vector::Zero(dims.total());
  v(index) = 1.0;
  return PureStateVector(std::move(v), dims);
}

bool PureStateVector::is_unit(double tol) const {
  return std::abs(norm() - 1.0) <= tol;
}

PureStateVector PureStateVector::normalized() const {
  const double n = norm();
  if (n < 1e-14)
    throw NormalizationError("normalized: vector is numerically zero");
  return PureStateVector(amplitudes_ / n, dims_);
}

PureStateVector PureStateVector::with_dims(SystemDims dims) const {
  if (dims.total() != dims_.total())
    throw DimensionError("with_dims: total dimension must be preserved");
  return PureStateVector(amplitudes_, dims);
}

HermitianOperator PureStateVector::projector() const {
  return HermitianOperator(amplitudes_ * amplitudes_.adjoint(), dims_);
}

Matrix kron_matrix(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Vector kron_vector(const Vector& a, const Vector& b) {
  Vector out(a.size() * b.size());
  for (Eigen::Index i = 0; i < a.size(); ++i)
    out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b) {
  return HermitianOperator(
      kron_matrix(a.matrix(), b.matrix()),
      SystemDims::bipartite(a.dims().total(), b.dims().total()));
}

PureStateVector kron(const PureStateVector& a, const PureStateVector& b) {
  return PureStateVector(
      kron_vector(a.amplitudes(), b.amplitudes()),
      SystemDims::bipartite(a.dims().total(), b.dims().total()));
}

Matrix partial_transpose_matrix(const Matrix& x, int dim_a, int dim_b) {
  Matrix out(x.rows(), x.cols());
  for (int ia = 0; ia < dim_a; ++ia)
    for (int ja = 0; ja < dim_a; ++ja)
      out.block(ia * dim_b, ja * dim_b, dim_b, dim_b) =
          x.block(ia * dim_b, ja * dim_b, dim_b, dim_b).transpose();
  return out;
}

HermitianOperator partial_transpose(const HermitianOperator& x) {
  if (!x.dims().is_bipartite())
    throw DimensionError("partial_transpose: operand is not bipartite");
  return HermitianOperator(
      partial_transpose_matrix(x.matrix(), x.dims().dim_a, x.dims().dim_b),
      x.dims());
}

Eigensystem eig_hermitian(const HermitianOperator& x) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(x.matrix());
  if (solver.info() != Eigen::Success)
    throw Error("eig_hermitian: eigensolver failed to converge");
  // Eigen returns ascending order; flip to descending.
  const int n = x.size();
  Eigensystem out;
  out.values = solver.eigenvalues().reverse();
  out.vectors.resize(n, n);
  for (int k = 0; k < n; ++k)
    out.vectors.col(k) = solver.eigenvectors().col(n - 1 - k);
  return out;
}

double min_eigenvalue(const HermitianOperator& x) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(x.matrix(),
                                               Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw Error("min_eigenvalue: eigensolver failed to converge");
  return solver.eigenvalues()(0);
}

PureStateVector SchmidtDecomposition::reconstruct(const SystemDims& dims) const {
  Vector v = Vector::Zero(dims.total());
  for (Eigen::Index k = 0; k < coefficients.size(); ++k)
    v += coefficients(k) *
         kron_vector(left_vectors.col(k), right_vectors.col(k));
  return PureStateVector(std::move(v), dims);
}

SchmidtDecomposition schmidt(const PureStateVector& v) {
  if (!v.dims().is_bipartite())
    throw DimensionError("schmidt: vector is not bipartite");
  const double n = v.norm();
  if (n < 1e-14) throw NormalizationError("schmidt: zero vector");

  const int da = v.dims().dim_a;
  const int db = v.dims().dim_b;
  Matrix coeff(da, db);
  for (int ia = 0; ia < da; ++ia)
    for (int ib = 0; ib < db; ++ib)
      coeff(ia, ib) = v.amplitudes()(ia * db + ib) / n;

  Eigen::JacobiSVD<Matrix> svd(coeff, Eigen::ComputeThinU | Eigen::ComputeThinV);
  SchmidtDecomposition out;
  out.coefficients = svd.singularValues();
  out.left_vectors = svd.matrixU();
  // coeff = U S V^dagger, so v/||v|| = sum_k s_k u_k (x) conj(v_k).
  out.right_vectors = svd.matrixV().conjugate();
  return out;
}

namespace {

// One side of the reduction: returns (alpha, basis) where basis columns are
// the canonical local basis in user coordinates. The first column carries the
// phase making <f1|second> = |<first|second>| real nonnegative.
std::pair<double, Matrix> reduce_pair(const Vector& first, const Vector& second) {
  const int d = static_cast<int>(first.size());
  const Complex overlap = first.dot(second);  // <first|second>
  const double overlap_abs = std::abs(overlap);
  const double alpha = std::max(0.0, 1.0 - overlap_abs * overlap_abs);

  Matrix basis = Matrix::Zero(d, d);
  const Complex phase =
      overlap_abs > 1e-14 ? overlap / overlap_abs : Complex(1.0, 0.0);
  basis.col(0) = phase * first;

  Vector residual = second - overlap * first;
  if (d > 1) {
    if (residual.norm() >= 1e-12) {
      residual -= first.dot(residual) * first;  // second orthogonalization pass
      basis.col(1) = residual / residual.norm();
    } else {
      // Parallel pair: any completion direction works; found below.
      basis.col(1).setZero();
    }
  }

  // Complete to a unitary by Gram-Schmidt over the standard basis.
  int next = (d > 1 && basis.col(1).norm() < 0.5) ? 1 : 2;
  for (int cand = 0; cand < d && next < d; ++cand) {
    Vector w = Vector::Zero(d);
    w(cand) = 1.0;
    for (int k = 0; k < next; ++k) w -= basis.col(k).dot(w) * basis.col(k);
    if (w.norm() < 0.5) continue;
    w /= w.norm();
    for (int k = 0; k < next; ++k) w -= basis.col(k).dot(w) * basis.col(k);
    basis.col(next++) = w / w.norm();
  }
  if (next < d)
    throw Error("canonical_reduction: basis completion failed");
  return {alpha, std::move(basis)};
}

}  // namespace

CanonicalForm canonical_reduction(const PureStateVector& a1,
                                  const PureStateVector& a2,
                                  const PureStateVector& b1,
                                  const PureStateVector& b2) {
  for (const auto* v : {&a1, &a2, &b1, &b2})
    if (!v->is_unit())
      throw NormalizationError("canonical_reduction: inputs must be unit-norm");
  if (a1.size() != a2.size() || b1.size() != b2.size())
    throw DimensionError("canonical_reduction: mismatched local dimensions");

  auto [alpha1, basis_a] = reduce_pair(a1.amplitudes(), a2.amplitudes());
  auto [alpha2, basis_b] = reduce_pair(b1.amplitudes(), b2.amplitudes());
  if (alpha1 < 1e-12 && alpha2 < 1e-12)
    throw IdenticalStatesError(
        "canonical_reduction: states are identical (x = y = 1)");

  CanonicalForm cf;
  cf.alpha1 = alpha1;
  cf.alpha2 = alpha2;
  cf.beta1 = std::sqrt(alpha1 * (1.0 - alpha1));
  cf.beta2 = std::sqrt(alpha2 * (1.0 - alpha2));
  cf.gamma = alpha1 + alpha2;
  if (alpha1 * alpha2 > 0.0)
    cf.xi = cf.beta1 * cf.beta2 / (alpha1 * alpha2);
  cf.basis_a = std::move(basis_a);
  cf.basis_b = std::move(basis_b);
  cf.padding_rank_a = a1.size() - std::min(a1.size(), 2);
  cf.padding_rank_b = b1.size() - std::min(b1.size(), 2);
  return cf;
}

CanonicalForm canonical_form_from_alphas(double alpha1, double alpha2) {
  if (alpha1 < 0.0 || alpha1 > 1.0 || alpha2 < 0.0 || alpha2 > 1.0)
    throw Error("canonical_form_from_alphas: alphas must lie in [0,1]");
  CanonicalForm cf;
  cf.alpha1 = alpha1;
  cf.alpha2 = alpha2;
  cf.beta1 = std::sqrt(alpha1 * (1.0 - alpha1));
  cf.beta2 = std::sqrt(alpha2 * (1.0 - alpha2));
  cf.gamma = alpha1 + alpha2;
  if (alpha1 * alpha2 > 0.0)
    cf.xi = cf.beta1 * cf.beta2 / (alpha1 * alpha2);
  cf.basis_a = Matrix::Identity(2, 2);
  cf.basis_b = Matrix::Identity(2, 2);
  return cf;
}

namespace {

Matrix local_block(double alpha, double beta, int d) {
  Matrix m = Matrix::Zero(d, d);
  m(0, 0) = 1.0 - alpha;
  if (d > 1) {
    m(0, 1) = beta;
    m(1, 0) = beta;
    m(1, 1) = alpha;
  }
  return m;
}

}  // namespace

HermitianOperator CanonicalForm::rho1_canonical() const {
  Matrix a = Matrix::Zero(dim_a(), dim_a());
  a(0, 0) = 1.0;
  Matrix b = Matrix::Zero(dim_b(), dim_b());
  b(0, 0) = 1.0;
  return HermitianOperator(kron_matrix(a, b), dims());
}

HermitianOperator CanonicalForm::rho2_canonical() const {
  return HermitianOperator(kron_matrix(local_block(alpha1, beta1, dim_a()),
                                       local_block(alpha2, beta2, dim_b())),
                           dims());
}

Matrix CanonicalForm::to_canonical_frame(const Matrix& user) const {
  const Matrix w = kron_matrix(basis_a, basis_b);
  return w.adjoint() * user * w;
}

Matrix CanonicalForm::to_user_frame(const Matrix& canonical) const {
  const Matrix w = kron_matrix(basis_a, basis_b);
  return w * canonical * w.adjoint();
}

}  // namespace gptd
