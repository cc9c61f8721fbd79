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

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include <doctest.h>

#include "gptd/cones.hpp"
#include "gptd/linalg.hpp"
#include "test_support.hpp"

namespace gptd {
namespace {

const SystemDims kTwoQubit = SystemDims::bipartite(2, 2);

PureStateVector bell_vector() {
  Vector v(4);
  v << 1, 0, 0, 1;
  return PureStateVector(v / std::sqrt(2.0), kTwoQubit);
}

HermitianOperator gamma_bell() {
  return partial_transpose(bell_vector().projector());
}

PureStateVector vec(std::initializer_list<double> entries, SystemDims dims) {
  Vector v(static_cast<int>(entries.size()));
  int i = 0;
  for (double e : entries) v(i++) = e;
  return PureStateVector(v, dims);
}

TEST_SUITE("cones") {

TEST_CASE("nege picks out the most negative eigenvalue") {
  Vector d(3);
  d << 1.0, -0.3, 0.2;
  HermitianOperator x(d.asDiagonal(), SystemDims::single(3));
  CHECK(nege(x) == doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("nege vanishes on PSD matrices") {
  std::mt19937_64 gen(21);
  for (int rep = 0; rep < 8; ++rep) {
    Matrix a = test::random_matrix(gen, 4, 4);
    HermitianOperator x(a.adjoint() * a, kTwoQubit);
    CHECK(nege(x) == 0.0);
  }
  // Zero is on the boundary, not negative.
  CHECK(nege(HermitianOperator::zero(kTwoQubit)) == 0.0);
}

TEST_CASE("nege of the partially transposed maximally entangled projector") {
  CHECK(nege(gamma_bell()) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("sco of product, maximally entangled, and zero vectors") {
  CHECK(sco(vec({1, 0, 0, 0}, kTwoQubit)) == 0.0);
  CHECK(sco(bell_vector()) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(sco(vec({0, 0, 0, 0}, kTwoQubit)) == 0.0);
  // A single Schmidt coefficient cannot form a product.
  CHECK(sco(vec({1, 0}, SystemDims::bipartite(1, 2))) == 0.0);
}

TEST_CASE("sco is normalization independent") {
  std::mt19937_64 gen(22);
  SystemDims dims = SystemDims::bipartite(3, 2);
  PureStateVector v(test::random_vector(gen, 6), dims);
  PureStateVector sv(3.7 * v.amplitudes(), dims);
  CHECK(sco(v) == doctest::Approx(sco(sv)).epsilon(1e-12));
}

TEST_CASE("sco is invariant under local unitaries") {
  std::mt19937_64 gen(23);
  SystemDims dims = SystemDims::bipartite(3, 4);
  for (int rep = 0; rep < 6; ++rep) {
    PureStateVector v(test::random_unit_vector(gen, 12), dims);
    Matrix u = kron_matrix(test::random_unitary(gen, 3),
                           test::random_unitary(gen, 4));
    PureStateVector w(u * v.amplitudes(), dims);
    CHECK(sco(v) == doctest::Approx(sco(w)).epsilon(1e-10));
  }
}

TEST_CASE("ppt spectrum of the maximally entangled vector") {
  RealVector spectrum = ppt_pure_spectrum(bell_vector());
  REQUIRE(spectrum.size() == 4);
  CHECK(spectrum(0) == doctest::Approx(0.5));
  CHECK(spectrum(1) == doctest::Approx(0.5));
  CHECK(spectrum(2) == doctest::Approx(0.5));
  CHECK(spectrum(3) == doctest::Approx(-0.5));
}

TEST_CASE("ppt spectrum of a product vector") {
  RealVector spectrum = ppt_pure_spectrum(vec({1, 0, 0, 0}, kTwoQubit));
  CHECK(spectrum(0) == doctest::Approx(1.0));
  CHECK(spectrum.tail(3).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("ppt spectrum of a skewed two-level vector") {
  RealVector spectrum = ppt_pure_spectrum(
      vec({std::sqrt(0.8), 0, 0, std::sqrt(0.2)}, kTwoQubit));
  REQUIRE(spectrum.size() == 4);
  CHECK(spectrum(0) == doctest::Approx(0.8).epsilon(1e-12));
  CHECK(spectrum(1) == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(spectrum(2) == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(spectrum(3) == doctest::Approx(-0.4).epsilon(1e-12));
}

TEST_CASE("ppt spectrum rejects the zero vector") {
  CHECK_THROWS_AS(ppt_pure_spectrum(vec({0, 0, 0, 0}, kTwoQubit)),
                  NormalizationError);
}

// The identity ||v||^2 sco(v) = nege(Gamma(|v><v|)) and the closed-form
// spectrum, sampled over all supported shapes with non-unit inputs.
TEST_CASE("sco ties the negativity of the partial transpose") {
  std::mt19937_64 gen(24);
  for (SystemDims dims : {SystemDims::bipartite(2, 2),
                          SystemDims::bipartite(2, 3),
                          SystemDims::bipartite(3, 3),
                          SystemDims::bipartite(4, 5)}) {
    for (int rep = 0; rep < 25; ++rep) {
      PureStateVector v(2.0 * test::random_vector(gen, dims.total()), dims);
      HermitianOperator gamma_proj = partial_transpose(v.projector());
      double lhs = v.norm() * v.norm() * sco(v);
      CHECK(std::abs(lhs - nege(gamma_proj)) <= 1e-9);

      RealVector predicted = ppt_pure_spectrum(v);
      RealVector actual =
          eig_hermitian(gamma_proj).values / (v.norm() * v.norm());
      REQUIRE(predicted.size() == actual.size());
      CHECK((predicted - actual).cwiseAbs().maxCoeff() <= 1e-9);
    }
  }
}

TEST_CASE("is_psd on the identity, the zero matrix, and a PPT image") {
  CHECK(is_psd(HermitianOperator::identity(kTwoQubit)));
  CHECK(is_psd(HermitianOperator::zero(SystemDims::single(2))));
  CHECK_FALSE(is_psd(gamma_bell()));
}

TEST_CASE("identity decomposes as a PSD sum of basis projectors") {
  PsdSumCert cert;
  for (int i = 0; i < 4; ++i)
    cert.terms.push_back({1.0, PureStateVector::basis_state(kTwoQubit, i)});
  HermitianOperator id = HermitianOperator::identity(kTwoQubit);
  CHECK(check_certificate(id, ConeId::psd(), cert).valid);
  CHECK(check_certificate(id, ConeId::povm_element(), cert).valid);
  // Basis vectors are products, so the same terms certify SEP and Ks0(0).
  CHECK(check_certificate(id, ConeId::sep(), cert).valid);
  CHECK(check_certificate(id, ConeId::ks0(0.0), cert).valid);
}

TEST_CASE("weighted sums reject negative weights and bad reconstructions") {
  PsdSumCert cert;
  cert.terms.push_back({-1.0, PureStateVector::basis_state(kTwoQubit, 0)});
  Verdict v = check_certificate(HermitianOperator::zero(kTwoQubit),
                                ConeId::psd(), cert);
  CHECK_FALSE(v.valid);
  CHECK(v.reason.find("negative weight") != std::string::npos);

  PsdSumCert wrong;
  wrong.terms.push_back({0.5, PureStateVector::basis_state(kTwoQubit, 0)});
  Verdict w = check_certificate(HermitianOperator::identity(kTwoQubit),
                                ConeId::psd(), wrong);
  CHECK_FALSE(w.valid);
  CHECK(w.reason.find("residual") != std::string::npos);
}

TEST_CASE("entangled decomposition terms fail tight sco budgets") {
  Ks0DecompCert cert;
  cert.terms.push_back({1.0, bell_vector()});
  HermitianOperator proj = bell_vector().projector();
  Verdict tight = check_certificate(proj, ConeId::ks0(0.4), cert);
  CHECK_FALSE(tight.valid);
  CHECK(tight.reason.find("sco") != std::string::npos);
  // The same term is admissible at the top of the parameter range.
  CHECK(check_certificate(proj, ConeId::ks0(0.5), cert).valid);
}

TEST_CASE("decomposition validity is monotone in the budget") {
  std::mt19937_64 gen(25);
  for (int rep = 0; rep < 10; ++rep) {
    // Random mix of product terms and one entangled term of known sco.
    Ks0DecompCert cert;
    std::uniform_real_distribution<double> unit(0.1, 1.0);
    Matrix sum = Matrix::Zero(4, 4);
    for (int k = 0; k < 3; ++k) {
      Vector prod = kron_vector(test::random_unit_vector(gen, 2),
                                test::random_unit_vector(gen, 2));
      double w = unit(gen);
      cert.terms.push_back({w, PureStateVector(prod, kTwoQubit)});
      sum += w * (prod * prod.adjoint()).eval();
    }
    PureStateVector ent = bell_vector();
    double w = unit(gen);
    cert.terms.push_back({w, ent});
    sum += w * (ent.amplitudes() * ent.amplitudes().adjoint()).eval();

    HermitianOperator x(sum, kTwoQubit);
    double smax = 0.5;  // sco of the entangled term dominates
    CHECK(check_certificate(x, ConeId::ks0(smax), cert).valid);
    CHECK_FALSE(check_certificate(x, ConeId::ks0(smax - 0.01), cert).valid);
  }
}

TEST_CASE("PSD sums certify the top of the decomposition hierarchy") {
  // sco never exceeds 1/2, so an arbitrary rank-one sum is admissible there.
  std::mt19937_64 gen(26);
  for (int rep = 0; rep < 6; ++rep) {
    PsdSumCert cert;
    Matrix sum = Matrix::Zero(4, 4);
    for (int k = 0; k < 4; ++k) {
      Vector v = test::random_unit_vector(gen, 4);
      double w = 0.25 + 0.5 * static_cast<double>(k);
      cert.terms.push_back({w, PureStateVector(v, kTwoQubit)});
      sum += w * (v * v.adjoint()).eval();
    }
    CHECK(check_certificate(HermitianOperator(sum, kTwoQubit),
                            ConeId::ks0(0.5), cert).valid);
  }
}

TEST_CASE("split certificate for the block-positive dual cone") {
  // Gamma(Bell projector) = 0 + Gamma(PSD), so the split (P=0, Q=proj) works.
  HermitianOperator x = gamma_bell();
  SepDualSplitCert split{HermitianOperator::zero(kTwoQubit),
                         bell_vector().projector()};
  CHECK(check_certificate(x, ConeId::sep_dual(), split).valid);

  // A non-PSD part invalidates the split.
  SepDualSplitCert bad{x, HermitianOperator::zero(kTwoQubit)};
  Verdict v = check_certificate(x, ConeId::sep_dual(), bad);
  CHECK_FALSE(v.valid);
  CHECK(v.reason.find("PSD") != std::string::npos);

  // A PSD sum also proves dual-cone membership.
  PsdSumCert cert;
  for (int i = 0; i < 4; ++i)
    cert.terms.push_back({1.0, PureStateVector::basis_state(kTwoQubit, i)});
  CHECK(check_certificate(HermitianOperator::identity(kTwoQubit),
                          ConeId::sep_dual(), cert).valid);
}

TEST_CASE("ks split certificates validate and respect the budget") {
  // X = I + Gamma(Bell projector): PSD part I, decomposition part the
  // projector, admissible exactly down to s = 1/2.
  HermitianOperator id = HermitianOperator::identity(kTwoQubit);
  HermitianOperator x(id.matrix() + gamma_bell().matrix(), kTwoQubit);
  KsSplitCert cert{id, Ks0DecompCert{{{1.0, bell_vector()}}}};
  CHECK(check_certificate(x, ConeId::ks(0.5), cert).valid);
  CHECK_FALSE(check_certificate(x, ConeId::ks(0.3), cert).valid);
}

TEST_CASE("variant and cone must agree") {
  HermitianOperator id = HermitianOperator::identity(kTwoQubit);
  KsSplitCert split{id, Ks0DecompCert{}};
  CHECK_THROWS_AS(check_certificate(id, ConeId::psd(), ConeCertificate(split)),
                  CertificateError);
  PsdSumCert sum;
  CHECK_THROWS_AS(check_certificate(id, ConeId::ks(0.2), ConeCertificate(sum)),
                  CertificateError);
}

TEST_CASE("cone parameter range is enforced") {
  CHECK_THROWS_AS(ConeId::ks0(0.6), InputError);
  CHECK_THROWS_AS(ConeId::ks(-0.1), InputError);
}

// The fixed gamma = 1 measurement element: nege is exactly 1/2, so the
// negativity budget separates s = 1/2 from anything smaller.
TEST_CASE("class membership tracks the negativity budget") {
  Matrix t1 = Matrix::Zero(4, 4);
  t1(0, 0) = t1(3, 3) = 0.5;
  t1(0, 3) = t1(3, 0) = -0.5;
  HermitianOperator t1_op(t1, kTwoQubit);
  HermitianOperator m1(t1 + partial_transpose(t1_op).matrix(), kTwoQubit);

  ConeCertificate evidence = SepDualSplitCert{t1_op, t1_op};
  CHECK(class_membership(m1, ClassParameter::ms(0.5), evidence).valid);

  Verdict below = class_membership(m1, ClassParameter::ms(0.4), evidence);
  CHECK_FALSE(below.valid);
  CHECK(below.reason.find("nege") != std::string::npos);
}

TEST_CASE("any PSD element with a rank-one sum is a POVM element") {
  std::mt19937_64 gen(27);
  Matrix a = test::random_matrix(gen, 4, 4);
  Matrix psd = a.adjoint() * a;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(psd);
  PsdSumCert cert;
  for (int k = 0; k < 4; ++k)
    cert.terms.push_back(
        {solver.eigenvalues()(k),
         PureStateVector(solver.eigenvectors().col(k), kTwoQubit)});
  HermitianOperator m(psd, kTwoQubit);
  CHECK(class_membership(m, ClassParameter::ms(0.0), ConeCertificate(cert))
            .valid);
}

TEST_CASE("class membership reports certificate mismatches as failures") {
  HermitianOperator id = HermitianOperator::identity(kTwoQubit);
  // M(K_s) requires a split certificate; a bare sum is a mismatch, reported
  // as an invalid verdict rather than an exception.
  PsdSumCert sum;
  Verdict v = class_membership(id, ClassParameter::mks(0.5),
                               ConeCertificate(sum));
  CHECK_FALSE(v.valid);
  CHECK_FALSE(v.reason.empty());
}

}  // TEST_SUITE

}  // namespace
}  // namespace gptd
