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

#include <cmath>
#include <cstdio>
#include <string>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "gptd/discrimination.hpp"
#include "gptd/io.hpp"
#include "test_support.hpp"

namespace gptd {
namespace {

using io::Json;
using test::max_abs;

const SystemDims kTwoQubit = SystemDims::bipartite(2, 2);

struct TempFile {
  std::string path;
  explicit TempFile(std::string name) : path(std::move(name)) {}
  ~TempFile() { std::remove(path.c_str()); }
};

TEST_SUITE("io") {

TEST_CASE("complex numbers round-trip as [re, im] pairs") {
  Complex z(0.25, -1.5);
  Json j = io::complex_to_json(z);
  REQUIRE(j.is_array());
  CHECK(io::complex_from_json(j) == z);

  CHECK_THROWS_AS(io::complex_from_json(Json{1.0}), InputError);
  CHECK_THROWS_AS(io::complex_from_json(Json{"a", "b"}), InputError);
}

TEST_CASE("vectors and matrices round-trip losslessly") {
  std::mt19937_64 gen(51);
  Vector v = test::random_vector(gen, 5);
  CHECK((io::vector_from_json(io::vector_to_json(v)) - v).norm() == 0.0);

  Matrix m = test::random_matrix(gen, 3, 4);
  CHECK(max_abs(io::matrix_from_json(io::matrix_to_json(m)) - m) == 0.0);

  Json ragged = Json::array({Json::array({io::complex_to_json({1, 0})}),
                             Json::array()});
  CHECK_THROWS_AS(io::matrix_from_json(ragged), InputError);
  CHECK_THROWS_AS(io::vector_from_json(Json::array()), InputError);
}

TEST_CASE("state files parse and validate") {
  Json j{{"dA", 2},
         {"dB", 2},
         {"a1", Json::array({Json{1.0, 0.0}, Json{0.0, 0.0}})},
         {"a2", Json::array({Json{0.0, 0.0}, Json{1.0, 0.0}})},
         {"b1", Json::array({Json{1.0, 0.0}, Json{0.0, 0.0}})},
         {"b2", Json::array({Json{0.0, 0.0}, Json{1.0, 0.0}})}};
  io::StateInput states = io::states_from_json(j);
  CHECK(states.a1.size() == 2);
  CHECK(states.a2.amplitudes()(1) == Complex(1, 0));

  Json back = io::states_to_json(states);
  CHECK(back["dA"] == 2);
  CHECK(io::states_from_json(back).b2.is_unit());

  SUBCASE("non-unit vectors are rejected") {
    Json bad = j;
    bad["a1"] = Json::array({Json{2.0, 0.0}, Json{0.0, 0.0}});
    CHECK_THROWS_WITH_AS(io::states_from_json(bad),
                         doctest::Contains("unit-norm"), InputError);
  }
  SUBCASE("dimension mismatches are rejected") {
    Json bad = j;
    bad["dA"] = 3;
    CHECK_THROWS_WITH_AS(io::states_from_json(bad),
                         doctest::Contains("dimension"), InputError);
  }
  SUBCASE("missing fields are rejected") {
    Json bad = j;
    bad.erase("b2");
    CHECK_THROWS_WITH_AS(io::states_from_json(bad), doctest::Contains("b2"),
                         InputError);
  }
  SUBCASE("non-objects are rejected") {
    CHECK_THROWS_AS(io::states_from_json(Json::array()), InputError);
  }
}

TEST_CASE("class parameters serialize with their derived bound") {
  Json ms = io::class_to_json(ClassParameter::ms(0.3));
  CHECK(ms["kind"] == "ms");
  CHECK(ms["s"].get<double>() == doctest::Approx(0.3));
  CHECK_FALSE(ms.contains("t"));
  CHECK(io::class_from_json(ms) == ClassParameter::ms(0.3));

  Json mks = io::class_to_json(ClassParameter::mks(0.25));
  CHECK(mks["kind"] == "mks");
  CHECK(mks["t"].get<double>() == doctest::Approx(0.25));
  CHECK(mks["s"].get<double>() == doctest::Approx(0.4).epsilon(1e-12));
  CHECK(io::class_from_json(mks) == ClassParameter::mks(0.25));

  CHECK_THROWS_AS(io::class_from_json(Json{{"kind", "other"}}), InputError);
  CHECK_THROWS_AS(io::class_from_json(Json{{"kind", "mks"}, {"s", 0.4}}),
                  InputError);
}

TEST_CASE("cone certificates round-trip across all variants") {
  Vector bell(4);
  bell << 1, 0, 0, 1;
  PureStateVector entangled(bell / std::sqrt(2.0), kTwoQubit);
  HermitianOperator id = HermitianOperator::identity(kTwoQubit);

  auto round_trip = [&](const ConeCertificate& cert) {
    return io::cone_certificate_from_json(io::cone_certificate_to_json(cert),
                                          kTwoQubit);
  };

  ConeCertificate psd = PsdSumCert{{{1.25, entangled}}};
  ConeCertificate psd_back = round_trip(psd);
  const auto& psd_terms = std::get<PsdSumCert>(psd_back).terms;
  REQUIRE(psd_terms.size() == 1);
  CHECK(psd_terms[0].weight == 1.25);

  ConeCertificate split = SepDualSplitCert{id, id};
  CHECK(max_abs(std::get<SepDualSplitCert>(round_trip(split)).q.matrix() -
                id.matrix()) == 0.0);

  ConeCertificate ks0 = Ks0DecompCert{{{0.5, entangled}}};
  CHECK(std::get<Ks0DecompCert>(round_trip(ks0)).terms.size() == 1);

  ConeCertificate ks = KsSplitCert{id, Ks0DecompCert{{{2.0, entangled}}}};
  ConeCertificate ks_round = round_trip(ks);
  CHECK(std::get<KsSplitCert>(ks_round).gamma_part.terms[0].weight == 2.0);

  CHECK_THROWS_AS(
      io::cone_certificate_from_json(Json{{"variant", "mystery"}}, kTwoQubit),
      InputError);
}

TEST_CASE("measurements round-trip and still verify") {
  CanonicalForm cf = canonical_form_from_alphas(0.8, 0.9);
  ClassParameter cls = ClassParameter::mks(0.5);
  MeasurementCertificate cert = build_measurement(cf, cls);
  REQUIRE(cert.branch == Branch::GammaGreater);

  Json j = io::measurement_to_json(cert);
  CHECK(j.contains("local_unitaries"));
  MeasurementCertificate back = io::measurement_from_json(j);

  CHECK(back.cls == cls);
  CHECK(back.branch == cert.branch);
  CHECK(max_abs(back.t1.matrix() - cert.t1.matrix()) == 0.0);
  CHECK(max_abs(back.t2.matrix() - cert.t2.matrix()) == 0.0);
  REQUIRE(back.terms1.size() == cert.terms1.size());
  REQUIRE(back.unitary_a.has_value());
  CHECK(max_abs(*back.unitary_a - *cert.unitary_a) == 0.0);

  VerificationReport report = verify_measurement(
      back, cf.rho1_canonical(), cf.rho2_canonical(), cls);
  CHECK(report.pass());
}

TEST_CASE("fixed-matrix measurements serialize without unitaries") {
  CanonicalForm cf = canonical_form_from_alphas(0.5, 0.5);
  MeasurementCertificate cert =
      build_measurement(cf, ClassParameter::ms(0.5));
  Json j = io::measurement_to_json(cert);
  CHECK_FALSE(j.contains("local_unitaries"));
  CHECK(j["branch"] == "gamma_equals_one");
  MeasurementCertificate back = io::measurement_from_json(j);
  CHECK_FALSE(back.unitary_a.has_value());
}

TEST_CASE("measurement parsing rejects schema violations") {
  CanonicalForm cf = canonical_form_from_alphas(0.5, 0.5);
  Json j = io::measurement_to_json(
      build_measurement(cf, ClassParameter::ms(0.5)));

  Json no_branch = j;
  no_branch.erase("branch");
  CHECK_THROWS_AS(io::measurement_from_json(no_branch), InputError);

  Json bad_dims = j;
  bad_dims["dims"]["dA"] = 3;  // T1 no longer matches
  CHECK_THROWS_AS(io::measurement_from_json(bad_dims), InputError);

  // A non-Hermitian payload is an input error, not an internal one.
  Json skew = j;
  skew["T1"][0][1] = Json{1.0, 0.0};
  skew["T1"][1][0] = Json{2.0, 0.0};
  CHECK_THROWS_AS(io::measurement_from_json(skew), InputError);
}

TEST_CASE("results embed verdict, canonical data, and metadata") {
  CanonicalForm cf = canonical_form_from_alphas(0.8, 0.8);
  DiscriminationResult result = discriminate(cf, ClassParameter::ms(0.25));
  REQUIRE(result.guaranteed);
  Json j = io::result_to_json(result);
  CHECK(j["guaranteed"] == true);
  CHECK(j["meta"]["generator"] == "gptd");
  CHECK(j["meta"]["format_version"] == 1);
  CHECK_FALSE(j.contains("reason"));
  CHECK(j["overlaps"]["x"].get<double>() == doctest::Approx(0.2));
  CHECK(j["canonical"]["gamma"].get<double>() == doctest::Approx(1.6));
  CHECK(j["canonical"].contains("xi"));
  CHECK(j["certificate"]["branch"] == "gamma_greater");
  CHECK(j["report"]["pass"] == true);
  REQUIRE(j["probabilities"].is_array());
  CHECK(j["probabilities"][0][0].get<double>() ==
        doctest::Approx(1.0).epsilon(1e-9));

  DiscriminationResult refused =
      discriminate(canonical_form_from_alphas(0.5, 0.5),
                   ClassParameter::ms(0.25));
  Json r = io::result_to_json(refused);
  CHECK(r["guaranteed"] == false);
  CHECK(r.contains("reason"));
  CHECK_FALSE(r.contains("certificate"));
}

TEST_CASE("verification reports serialize both elements") {
  CanonicalForm cf = canonical_form_from_alphas(0.5, 0.5);
  MeasurementCertificate cert =
      build_measurement(cf, ClassParameter::ms(0.5));
  VerificationReport report = verify_measurement(
      cert, cf.rho1_canonical(), cf.rho2_canonical(), ClassParameter::ms(0.5));
  Json j = io::report_to_json(report);
  CHECK(j["pass"] == true);
  CHECK(j["unit_ok"] == true);
  CHECK(j["M1"]["nege"].get<double>() == doctest::Approx(0.5));
  CHECK(j["M2"]["membership_valid"] == true);
}

TEST_CASE("region CSV carries twelve significant digits") {
  std::vector<RegionRow> rows = {{0.0, 1.0, true},
                                 {1.0 / 3.0, 0.5, true},
                                 {1.0, 0.0, true}};
  std::string csv = io::region_to_csv(rows, ClassParameter::ms(0.5));
  CHECK(csv.rfind("x,y_boundary,class,param\n", 0) == 0);
  CHECK(csv.find("0.333333333333,0.5,ms,0.5\n") != std::string::npos);
  CHECK(csv.find("1,0,ms,0.5\n") != std::string::npos);

  // The derived bound stands in for the second class's parameter column.
  std::string mks_csv = io::region_to_csv(rows, ClassParameter::mks(0.25));
  CHECK(mks_csv.find(",mks,0.4\n") != std::string::npos);
}

TEST_CASE("significant-digit formatting") {
  CHECK(io::format_significant(0.4) == "0.4");
  CHECK(io::format_significant(0.0) == "0");
  CHECK(io::format_significant(1.0 / 3.0) == "0.333333333333");
  CHECK(io::format_significant(1e-07) == "1e-07");
  CHECK(io::format_significant(2.0 / 3.0, 6) == "0.666667");
}

TEST_CASE("json files load with clear failure modes") {
  CHECK_THROWS_WITH_AS(io::load_json_file("does_not_exist.json"),
                       doctest::Contains("cannot open"), InputError);

  TempFile truncated("io_test_truncated.json");
  io::write_text_file(truncated.path, "{\"dA\": 2, ");
  CHECK_THROWS_WITH_AS(io::load_json_file(truncated.path),
                       doctest::Contains("invalid JSON"), InputError);

  TempFile good("io_test_good.json");
  io::write_text_file(good.path, "{\"dA\": 2}");
  CHECK(io::load_json_file(good.path)["dA"] == 2);
}

}  // TEST_SUITE

}  // namespace
}  // namespace gptd
