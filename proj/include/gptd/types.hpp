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

#ifndef GPTD_TYPES_HPP
#define GPTD_TYPES_HPP

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>
#include <string>

namespace gptd {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Hermiticity defect allowed when constructing a HermitianOperator.
inline constexpr double kHermitianTol = 1e-12;
/// Residual allowed for decompositions (Schmidt, canonical reduction).
inline constexpr double kDecompositionTol = 1e-10;
/// Reconstruction tolerance for cone certificates (max-entry norm).
inline constexpr double kCertificateTol = 1e-9;
/// Eigenvalues above this are not counted as negative by nege().
inline constexpr double kNegativeEigCutoff = -1e-12;
/// Norm tolerance accepted for state vectors supplied by callers.
inline constexpr double kUnitNormTol = 1e-9;
/// Minimum eigenvalue accepted by is_psd().
inline constexpr double kPsdTol = -1e-10;
/// Slack added to the class bound when checking per-term sco values.
inline constexpr double kScoSlack = 1e-10;
/// Slack added to the right-hand side of the feasibility conditions.
inline constexpr double kConditionSlack = 1e-12;
/// Branch selection tolerance (alpha_i = 1 and gamma = 1 tests).
inline constexpr double kBranchTol = 1e-9;

class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
public:
  using Error::Error;
};

class NotHermitianError : public Error {
public:
  using Error::Error;
};

class NormalizationError : public Error {
public:
  using Error::Error;
};

/// Both input pairs are parallel: the two states coincide (x = y = 1).
class IdenticalStatesError : public Error {
public:
  using Error::Error;
};

/// The sufficient condition of the requested class does not hold; no
/// construction is attempted (and no impossibility is claimed).
class ConditionNotSatisfiedError : public Error {
public:
  using Error::Error;
};

/// s = 0 (or t = 0): no finite copy count can work for overlapping states.
class ZeroParameterError : public Error {
public:
  using Error::Error;
};

class SearchCapExceededError : public Error {
public:
  using Error::Error;
};

/// Certificate missing, or its variant does not match the target cone.
class CertificateError : public Error {
public:
  using Error::Error;
};

/// Malformed input files or CLI parameters.
class InputError : public Error {
public:
  using Error::Error;
};

/// Dimension tag shared by operators and state vectors. A value is either a
/// single system of dimension `dim_a` or a bipartite system A (x) B with the
/// row-major index convention i = i_A * d_B + i_B.
struct SystemDims {
  int dim_a = 0;
  int dim_b = 0;  // 0 marks a single system

  static SystemDims single(int d) {
    if (d < 1) throw DimensionError("SystemDims: dimension must be positive");
    return SystemDims{d, 0};
  }
  static SystemDims bipartite(int d_a, int d_b) {
    if (d_a < 1 || d_b < 1)
      throw DimensionError("SystemDims: dimensions must be positive");
    return SystemDims{d_a, d_b};
  }

  bool is_bipartite() const { return dim_b > 0; }
  int total() const { return is_bipartite() ? dim_a * dim_b : dim_a; }

  friend bool operator==(const SystemDims&, const SystemDims&) = default;
};

}  // namespace gptd

#endif  // GPTD_TYPES_HPP
