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

#ifndef GPTD_IO_HPP
#define GPTD_IO_HPP

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "gptd/class_parameter.hpp"
#include "gptd/cones.hpp"
#include "gptd/discrimination.hpp"
#include "gptd/linalg.hpp"
#include "gptd/multicopy.hpp"
#include "gptd/types.hpp"

namespace gptd::io {

using Json = nlohmann::json;

/// Parsed state file { "dA", "dB", "a1", "b1", "a2", "b2" }: the local
/// factors of two product states |a1 b1>, |a2 b2>. All four vectors are
/// unit-norm within kUnitNormTol.
struct StateInput {
  PureStateVector a1;
  PureStateVector a2;
  PureStateVector b1;
  PureStateVector b2;
};

// Complex numbers serialize as [re, im]; vectors as arrays of those;
// matrices as row-major nested arrays.
Json complex_to_json(const Complex& z);
Complex complex_from_json(const Json& j);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// Throws InputError on schema violations, dimension mismatches, or
/// non-unit vectors.
StateInput states_from_json(const Json& j);
Json states_to_json(const StateInput& s);

Json class_to_json(const ClassParameter& cls);
ClassParameter class_from_json(const Json& j);

Json cone_certificate_to_json(const ConeCertificate& cert);
ConeCertificate cone_certificate_from_json(const Json& j,
                                           const SystemDims& dims);

Json measurement_to_json(const MeasurementCertificate& cert);
MeasurementCertificate measurement_from_json(const Json& j);

Json report_to_json(const VerificationReport& report);
Json result_to_json(const DiscriminationResult& result);

/// CSV with header `x,y_boundary,class,param`; param is the class's s value
/// (derived from t for MKs); numbers carry 12 significant digits.
std::string region_to_csv(const std::vector<RegionRow>& rows,
                          const ClassParameter& cls);

/// Shortest decimal form with the given significant digits ("%.*g").
std::string format_significant(double value, int digits = 12);

/// Throws InputError when the file is missing or not valid JSON.
Json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace gptd::io

#endif  // GPTD_IO_HPP
