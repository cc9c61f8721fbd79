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

#include "gptd/io.hpp"

#include <cstdio>
#include <fstream>
#include <utility>

#include <nlohmann/json.hpp>

namespace gptd::io {

namespace {

const Json& require_field(const Json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end())
    throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

double require_number(const Json& j, const char* what) {
  if (!j.is_number())
    throw InputError(std::string(what) + " must be a number");
  return j.get<double>();
}

int require_positive_int(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<int>() < 1)
    throw InputError(std::string(what) + " must be a positive integer");
  return j.get<int>();
}

Json weighted_terms_to_json(const std::vector<WeightedVector>& terms) {
  Json arr = Json::array();
  for (const auto& term : terms)
    arr.push_back(Json{{"weight", term.weight},
                       {"vector", vector_to_json(term.vector.amplitudes())}});
  return arr;
}

std::vector<WeightedVector> weighted_terms_from_json(const Json& j,
                                                     const SystemDims& dims) {
  if (!j.is_array()) throw InputError("terms must be an array");
  std::vector<WeightedVector> terms;
  terms.reserve(j.size());
  for (const auto& entry : j) {
    const double weight = require_number(require_field(entry, "weight"), "weight");
    Vector v = vector_from_json(require_field(entry, "vector"));
    if (v.size() != dims.total())
      throw InputError("certificate term has wrong dimension");
    terms.push_back({weight, PureStateVector(std::move(v), dims)});
  }
  return terms;
}

HermitianOperator operator_from_json(const Json& j, const SystemDims& dims,
                                     const char* what) {
  Matrix m = matrix_from_json(j);
  if (m.rows() != dims.total())
    throw InputError(std::string(what) + " has wrong dimension");
  try {
    return HermitianOperator(std::move(m), dims);
  } catch (const Error& e) {
    throw InputError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

Json complex_to_json(const Complex& z) { return Json{z.real(), z.imag()}; }

Complex complex_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError("complex entries must be [re, im] number pairs");
  return Complex(j[0].get<double>(), j[1].get<double>());
}

Json vector_to_json(const Vector& v) {
  Json arr = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i)
    arr.push_back(complex_to_json(v(i)));
  return arr;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw InputError("vectors must be nonempty arrays");
  Vector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i)
    v(static_cast<Eigen::Index>(i)) = complex_from_json(j[i]);
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k)
      row.push_back(complex_to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    throw InputError("matrices must be nonempty arrays of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = j[0].is_array() ? j[0].size() : 0;
  if (cols == 0) throw InputError("matrix rows must be nonempty arrays");
  Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols)
      throw InputError("matrix rows have inconsistent lengths");
    for (std::size_t k = 0; k < cols; ++k)
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k)) =
          complex_from_json(j[i][k]);
  }
  return m;
}

StateInput states_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("state file must be a JSON object");
  const int d_a = require_positive_int(require_field(j, "dA"), "dA");
  const int d_b = require_positive_int(require_field(j, "dB"), "dB");

  auto parse_local = [&](const char* key, int d) {
    Vector v = vector_from_json(require_field(j, key));
    if (v.size() != d)
      throw InputError(std::string("\"") + key +
                       "\" does not match the declared dimension");
    PureStateVector state(std::move(v), SystemDims::single(d));
    if (!state.is_unit())
      throw InputError(std::string("\"") + key + "\" is not unit-norm");
    return state;
  };
  return StateInput{parse_local("a1", d_a), parse_local("a2", d_a),
                    parse_local("b1", d_b), parse_local("b2", d_b)};
}

Json states_to_json(const StateInput& s) {
  return Json{{"dA", s.a1.size()},
              {"dB", s.b1.size()},
              {"a1", vector_to_json(s.a1.amplitudes())},
              {"a2", vector_to_json(s.a2.amplitudes())},
              {"b1", vector_to_json(s.b1.amplitudes())},
              {"b2", vector_to_json(s.b2.amplitudes())}};
}

Json class_to_json(const ClassParameter& cls) {
  Json j{{"kind", cls.label()}, {"s", cls.s()}};
  if (!cls.is_ms()) j["t"] = cls.t();
  return j;
}

ClassParameter class_from_json(const Json& j) {
  const std::string kind = require_field(j, "kind").get<std::string>();
  if (kind == "ms")
    return ClassParameter::ms(require_number(require_field(j, "s"), "s"));
  if (kind == "mks")
    return ClassParameter::mks(require_number(require_field(j, "t"), "t"));
  throw InputError("class kind must be \"ms\" or \"mks\"");
}

Json cone_certificate_to_json(const ConeCertificate& cert) {
  if (const auto* psd = std::get_if<PsdSumCert>(&cert))
    return Json{{"variant", "psd_sum"},
                {"terms", weighted_terms_to_json(psd->terms)}};
  if (const auto* split = std::get_if<SepDualSplitCert>(&cert))
    return Json{{"variant", "sep_dual_split"},
                {"P", matrix_to_json(split->p.matrix())},
                {"Q", matrix_to_json(split->q.matrix())}};
  if (const auto* ks0 = std::get_if<Ks0DecompCert>(&cert))
    return Json{{"variant", "ks0_decomp"},
                {"terms", weighted_terms_to_json(ks0->terms)}};
  const auto& ks = std::get<KsSplitCert>(cert);
  return Json{{"variant", "ks_split"},
              {"psd_part", matrix_to_json(ks.psd_part.matrix())},
              {"gamma_part",
               Json{{"terms", weighted_terms_to_json(ks.gamma_part.terms)}}}};
}

ConeCertificate cone_certificate_from_json(const Json& j,
                                           const SystemDims& dims) {
  const std::string variant = require_field(j, "variant").get<std::string>();
  if (variant == "psd_sum")
    return PsdSumCert{weighted_terms_from_json(require_field(j, "terms"), dims)};
  if (variant == "sep_dual_split")
    return SepDualSplitCert{
        operator_from_json(require_field(j, "P"), dims, "P"),
        operator_from_json(require_field(j, "Q"), dims, "Q")};
  if (variant == "ks0_decomp")
    return Ks0DecompCert{weighted_terms_from_json(require_field(j, "terms"), dims)};
  if (variant == "ks_split") {
    const Json& gamma = require_field(j, "gamma_part");
    return KsSplitCert{
        operator_from_json(require_field(j, "psd_part"), dims, "psd_part"),
        Ks0DecompCert{weighted_terms_from_json(require_field(gamma, "terms"),
                                               dims)}};
  }
  throw InputError("unknown certificate variant: " + variant);
}

Json measurement_to_json(const MeasurementCertificate& cert) {
  Json j{{"class", class_to_json(cert.cls)},
         {"branch", branch_label(cert.branch)},
         {"dims", Json{{"dA", cert.t1.dims().dim_a}, {"dB", cert.t1.dims().dim_b}}},
         {"T1", matrix_to_json(cert.t1.matrix())},
         {"T2", matrix_to_json(cert.t2.matrix())},
         {"rank_one_terms", Json{{"T1", weighted_terms_to_json(cert.terms1)},
                                 {"T2", weighted_terms_to_json(cert.terms2)}}},
         {"cone_evidence", Json{{"M1", cone_certificate_to_json(cert.evidence1)},
                                {"M2", cone_certificate_to_json(cert.evidence2)}}}};
  if (cert.unitary_a && cert.unitary_b)
    j["local_unitaries"] = Json{{"U_A", matrix_to_json(*cert.unitary_a)},
                                {"U_B", matrix_to_json(*cert.unitary_b)}};
  return j;
}

MeasurementCertificate measurement_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("measurement must be a JSON object");
  const ClassParameter cls = class_from_json(require_field(j, "class"));
  const Branch branch =
      branch_from_label(require_field(j, "branch").get<std::string>());
  const Json& dims_json = require_field(j, "dims");
  const SystemDims dims = SystemDims::bipartite(
      require_positive_int(require_field(dims_json, "dA"), "dA"),
      require_positive_int(require_field(dims_json, "dB"), "dB"));

  HermitianOperator t1 = operator_from_json(require_field(j, "T1"), dims, "T1");
  HermitianOperator t2 = operator_from_json(require_field(j, "T2"), dims, "T2");
  const Json& terms = require_field(j, "rank_one_terms");
  std::vector<WeightedVector> terms1 =
      weighted_terms_from_json(require_field(terms, "T1"), dims);
  std::vector<WeightedVector> terms2 =
      weighted_terms_from_json(require_field(terms, "T2"), dims);
  const Json& evidence = require_field(j, "cone_evidence");
  ConeCertificate ev1 =
      cone_certificate_from_json(require_field(evidence, "M1"), dims);
  ConeCertificate ev2 =
      cone_certificate_from_json(require_field(evidence, "M2"), dims);

  std::optional<Matrix> u_a;
  std::optional<Matrix> u_b;
  if (const auto it = j.find("local_unitaries"); it != j.end()) {
    u_a = matrix_from_json(require_field(*it, "U_A"));
    u_b = matrix_from_json(require_field(*it, "U_B"));
  }
  return MeasurementCertificate{cls,
                                branch,
                                std::move(t1),
                                std::move(t2),
                                std::move(terms1),
                                std::move(terms2),
                                std::move(u_a),
                                std::move(u_b),
                                std::move(ev1),
                                std::move(ev2)};
}

Json report_to_json(const VerificationReport& report) {
  auto element = [](const ElementCheck& check) {
    return Json{{"nege", check.nege_value},
                {"max_term_sco", check.max_term_sco},
                {"membership_valid", check.membership.valid},
                {"membership_reason", check.membership.reason}};
  };
  return Json{{"unit_ok", report.unit_ok},
              {"unit_residual", report.unit_residual},
              {"cone_ok", report.cone_ok},
              {"zero_error_ok", report.zero_error_ok},
              {"zero_error_residual", report.zero_error_residual},
              {"M1", element(report.element1)},
              {"M2", element(report.element2)},
              {"pass", report.pass()}};
}

Json result_to_json(const DiscriminationResult& result) {
  Json j{{"guaranteed", result.guaranteed},
         {"overlaps", Json{{"x", result.overlaps.x}, {"y", result.overlaps.y}}},
         {"meta", Json{{"generator", "gptd"}, {"format_version", 1}}}};
  if (!result.guaranteed) j["reason"] = result.reason;
  if (result.canonical) {
    const CanonicalForm& cf = *result.canonical;
    Json canonical{{"alpha1", cf.alpha1}, {"alpha2", cf.alpha2},
                   {"beta1", cf.beta1},   {"beta2", cf.beta2},
                   {"gamma", cf.gamma},   {"basis_a", matrix_to_json(cf.basis_a)},
                   {"basis_b", matrix_to_json(cf.basis_b)}};
    canonical["xi"] = cf.xi ? Json(*cf.xi) : Json(nullptr);
    j["canonical"] = std::move(canonical);
  }
  if (result.certificate)
    j["certificate"] = measurement_to_json(*result.certificate);
  if (result.report) j["report"] = report_to_json(*result.report);
  if (result.probabilities) {
    const auto& p = *result.probabilities;
    j["probabilities"] = Json{{p[0][0], p[0][1]}, {p[1][0], p[1][1]}};
  }
  return j;
}

std::string format_significant(double value, int digits) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.*g", digits, value);
  return buffer;
}

std::string region_to_csv(const std::vector<RegionRow>& rows,
                          const ClassParameter& cls) {
  std::string csv = "x,y_boundary,class,param\n";
  const std::string param = format_significant(cls.s());
  for (const auto& row : rows) {
    csv += format_significant(row.x);
    csv += ',';
    csv += format_significant(row.y_boundary);
    csv += ',';
    csv += cls.label();
    csv += ',';
    csv += param;
    csv += '\n';
  }
  return csv;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("invalid JSON in " + path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot open file for writing: " + path);
  out << content;
  if (!out) throw InputError("failed to write file: " + path);
}

}  // namespace gptd::io
