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

#ifndef GPTD_LINALG_HPP
#define GPTD_LINALG_HPP

#include <optional>
#include <vector>

#include "gptd/types.hpp"

namespace gptd {

/// Square complex Hermitian matrix tagged with its system dimensions.
/// Construction enforces squareness, the dimension tag, and Hermiticity up to
/// kHermitianTol in max-entry norm.
class HermitianOperator {
public:
  HermitianOperator(Matrix entries, SystemDims dims);

  static HermitianOperator identity(SystemDims dims);
  static HermitianOperator zero(SystemDims dims);

  const Matrix& matrix() const { return entries_; }
  const SystemDims& dims() const { return dims_; }
  int size() const { return static_cast<int>(entries_.rows()); }

  /// Same entries under a different dimension tag of equal total size.
  HermitianOperator with_dims(SystemDims dims) const;

  double trace() const { return entries_.trace().real(); }

private:
  Matrix entries_;
  SystemDims dims_;
};

/// Complex vector tagged with its system dimensions. Norm is unconstrained;
/// operations that need a unit or nonzero vector check for themselves.
class PureStateVector {
public:
  PureStateVector(Vector amplitudes, SystemDims dims);

  static PureStateVector basis_state(SystemDims dims, int index);

  const Vector& amplitudes() const { return amplitudes_; }
  const SystemDims& dims() const { return dims_; }
  int size() const { return static_cast<int>(amplitudes_.size()); }

  double norm() const { return amplitudes_.norm(); }
  bool is_unit(double tol = kUnitNormTol) const;
  /// Throws NormalizationError on (numerically) zero vectors.
  PureStateVector normalized() const;
  PureStateVector with_dims(SystemDims dims) const;

  /// |v><v| (uses the amplitudes as stored, no normalization).
  HermitianOperator projector() const;

private:
  Vector amplitudes_;
  SystemDims dims_;
};

/// Descending Schmidt coefficients of v/||v|| together with the orthonormal
/// local vectors (columns) realizing v/||v|| = sum_i lambda_i l_i (x) r_i.
struct SchmidtDecomposition {
  RealVector coefficients;  // lambda_1 >= ... >= lambda_d >= 0, d = min(dA,dB)
  Matrix left_vectors;      // dA x d
  Matrix right_vectors;     // dB x d

  PureStateVector reconstruct(const SystemDims& dims) const;
};

/// The local basis changes and parameters that bring a pair of separable pure
/// states to the two-level normal form
///   rho1 = diag(1,0) (x) diag(1,0),
///   rho2 = [[1-a1, b1],[b1, a1]] (x) [[1-a2, b2],[b2, a2]],
/// padded with zeros beyond the leading 2x2 blocks. Columns of basis_a/basis_b
/// are the canonical basis vectors expressed in the caller's coordinates, so
/// X_canonical = basis^dagger X_user basis.
struct CanonicalForm {
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double beta1 = 0.0;  // sqrt(alpha1 (1-alpha1))
  double beta2 = 0.0;
  double gamma = 0.0;               // alpha1 + alpha2
  std::optional<double> xi;         // beta1 beta2 / (alpha1 alpha2) when defined
  Matrix basis_a;                   // dA x dA unitary
  Matrix basis_b;                   // dB x dB unitary
  int padding_rank_a = 0;           // dA - min(dA, 2)
  int padding_rank_b = 0;

  int dim_a() const { return static_cast<int>(basis_a.rows()); }
  int dim_b() const { return static_cast<int>(basis_b.rows()); }
  SystemDims dims() const { return SystemDims::bipartite(dim_a(), dim_b()); }

  /// Overlaps of the instance: x = Tr rho1^A rho2^A = 1 - alpha1, likewise y.
  double x() const { return 1.0 - alpha1; }
  double y() const { return 1.0 - alpha2; }

  /// The two states in the canonical frame, on the full (padded) space.
  HermitianOperator rho1_canonical() const;
  HermitianOperator rho2_canonical() const;

  /// Transport between the caller's frame and the canonical frame.
  Matrix to_canonical_frame(const Matrix& user) const;
  Matrix to_user_frame(const Matrix& canonical) const;
};

/// Tensor product; the first operand becomes the A factor. Index convention
/// i = i_A * d_B + i_B, with d_A, d_B the operands' total dimensions.
HermitianOperator kron(const HermitianOperator& a, const HermitianOperator& b);
PureStateVector kron(const PureStateVector& a, const PureStateVector& b);
Matrix kron_matrix(const Matrix& a, const Matrix& b);
Vector kron_vector(const Vector& a, const Vector& b);

/// Partial transpose on the B factor. Requires a bipartite operand.
HermitianOperator partial_transpose(const HermitianOperator& x);
Matrix partial_transpose_matrix(const Matrix& x, int dim_a, int dim_b);

struct Eigensystem {
  RealVector values;  // descending
  Matrix vectors;     // orthonormal columns, aligned with values
};

Eigensystem eig_hermitian(const HermitianOperator& x);

/// Smallest eigenvalue of a Hermitian matrix (no eigenvectors computed).
double min_eigenvalue(const HermitianOperator& x);

SchmidtDecomposition schmidt(const PureStateVector& v);

/// Reduces two separable pure states |a1 b1>, |a2 b2> to the two-level normal
/// form. Overlap phases are rotated so <a1|a2> and <b1|b2> become real and
/// nonnegative, which makes the canonical blocks real. All four vectors must
/// be unit-norm. Throws IdenticalStatesError when a1 || a2 and b1 || b2.
CanonicalForm canonical_reduction(const PureStateVector& a1,
                                  const PureStateVector& a2,
                                  const PureStateVector& b1,
                                  const PureStateVector& b2);

/// Canonical form with the identity basis on a 2 (x) 2 system; used to state
/// instances directly in terms of the (alpha1, alpha2) parameters.
CanonicalForm canonical_form_from_alphas(double alpha1, double alpha2);

}  // namespace gptd

#endif  // GPTD_LINALG_HPP
