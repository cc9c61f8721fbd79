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

#include "gptd/oracle.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <random>
#include <utility>

#include <nlohmann/json.hpp>

#include "gptd/cones.hpp"
#include "gptd/discrimination.hpp"
#include "gptd/multicopy.hpp"

namespace gptd {

namespace {

std::pair<double, Vector> min_eig_pair(const Matrix& m) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(m);
  if (solver.info() != Eigen::Success)
    throw Error("seesaw: eigensolver failed to converge");
  return {solver.eigenvalues()(0), solver.eigenvectors().col(0)};
}

// C_A(iA, jA) = <b| M[iA block, jA block] |b>
Matrix contract_b(const Matrix& m, const Vector& b, int d_a, int d_b) {
  Matrix c(d_a, d_a);
  for (int ia = 0; ia < d_a; ++ia)
    for (int ja = 0; ja < d_a; ++ja)
      c(ia, ja) = (b.adjoint() * m.block(ia * d_b, ja * d_b, d_b, d_b) * b)(0, 0);
  return c;
}

Matrix contract_a(const Matrix& m, const Vector& a, int d_a, int d_b) {
  Matrix c = Matrix::Zero(d_b, d_b);
  for (int ia = 0; ia < d_a; ++ia)
    for (int ja = 0; ja < d_a; ++ja)
      c.noalias() +=
          std::conj(a(ia)) * a(ja) * m.block(ia * d_b, ja * d_b, d_b, d_b);
  return c;
}

Vector random_unit_vector(int d, std::mt19937_64& gen) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Vector v(d);
  for (int i = 0; i < d; ++i) {
    const double re = normal(gen);
    const double im = normal(gen);
    v(i) = Complex(re, im);
  }
  return v / v.norm();
}

std::mt19937_64 restart_generator(std::uint64_t seed, std::uint64_t index) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(index),
                    static_cast<std::uint32_t>(index >> 32)};
  return std::mt19937_64(seq);
}

bool raw_copy_condition(double x, const ClassParameter& cls) {
  const double factor =
      cls.is_ms() ? 4.0 * cls.s() * cls.s() : cls.t();
  return x * x <= factor * (1.0 - x) * (1.0 - x);
}

}  // namespace

SeesawTrace seesaw_descend(const HermitianOperator& m,
                           const PureStateVector& a0,
                           const PureStateVector& b0, int max_iters,
                           double convergence_tol) {
  if (!m.dims().is_bipartite())
    throw DimensionError("seesaw: operator is not bipartite");
  const int d_a = m.dims().dim_a;
  const int d_b = m.dims().dim_b;
  if (a0.size() != d_a || b0.size() != d_b)
    throw DimensionError("seesaw: start vectors do not match the factors");
  if (max_iters < 1) throw InputError("seesaw: max_iters must be positive");

  Vector a = a0.normalized().amplitudes();
  Vector b = b0.normalized().amplitudes();

  std::vector<double> history;
  double value =
      (a.adjoint() * contract_b(m.matrix(), b, d_a, d_b) * a)(0, 0).real();
  history.push_back(value);

  for (int iter = 0; iter < max_iters; ++iter) {
    auto [val_a, next_a] = min_eig_pair(contract_b(m.matrix(), b, d_a, d_b));
    a = next_a;
    history.push_back(val_a);
    auto [val_b, next_b] = min_eig_pair(contract_a(m.matrix(), a, d_a, d_b));
    b = next_b;
    history.push_back(val_b);
    const bool converged = std::abs(value - val_b) <= convergence_tol;
    value = val_b;
    if (converged) break;
  }

  return SeesawTrace{value,
                     PureStateVector(std::move(a), SystemDims::single(d_a)),
                     PureStateVector(std::move(b), SystemDims::single(d_b)),
                     std::move(history)};
}

ProductMinResult min_product_expectation(const HermitianOperator& m,
                                         const SeesawConfig& cfg) {
  if (!m.dims().is_bipartite())
    throw DimensionError("min_product_expectation: operator is not bipartite");
  if (cfg.restarts < 1 || cfg.max_iters < 1 || cfg.convergence_tol <= 0.0)
    throw InputError("min_product_expectation: config values must be positive");

  const int d_a = m.dims().dim_a;
  const int d_b = m.dims().dim_b;
  std::optional<ProductMinResult> best;
  for (int r = 0; r < cfg.restarts; ++r) {
    auto gen = restart_generator(cfg.seed, static_cast<std::uint64_t>(r));
    const PureStateVector a0(random_unit_vector(d_a, gen),
                             SystemDims::single(d_a));
    const PureStateVector b0(random_unit_vector(d_b, gen),
                             SystemDims::single(d_b));
    SeesawTrace trace =
        seesaw_descend(m, a0, b0, cfg.max_iters, cfg.convergence_tol);
    if (!best || trace.value < best->value)
      best = ProductMinResult{trace.value, std::move(trace.witness_a),
                              std::move(trace.witness_b)};
  }
  return *best;
}

std::optional<std::int64_t> scan_min_copies(double c, const ClassParameter& cls,
                                            std::int64_t cap) {
  if (!(c >= 0.0 && c < 1.0))
    throw InputError("scan_min_copies: overlap c must lie in [0, 1)");
  if (cap < 1) throw InputError("scan_min_copies: cap must be positive");

  if (cls.is_zero()) {
    // The inequality degenerates to x^2 <= 0, which c^n satisfies only at
    // c = 0. Answered exactly: iterated multiplication would underflow to
    // zero near n = 1075 and fake a solution.
    return c == 0.0 ? std::optional<std::int64_t>(1) : std::nullopt;
  }

  double x = 1.0;
  for (std::int64_t n = 1; n <= cap; ++n) {
    x *= c;
    if (raw_copy_condition(x, cls)) return n;
  }
  return std::nullopt;
}

int AuditReport::failure_count() const {
  int failures = 0;
  for (const auto& inst : instances)
    if (!inst.pass()) ++failures;
  return failures;
}

std::string AuditReport::to_json_lines() const {
  std::string out;
  for (const auto& inst : instances) {
    const nlohmann::json line{{"index", inst.index},
                              {"class", inst.class_label},
                              {"param", inst.parameter},
                              {"alpha1", inst.alpha1},
                              {"alpha2", inst.alpha2},
                              {"x", inst.x},
                              {"y", inst.y},
                              {"branch", inst.branch},
                              {"unit_residual", inst.unit_residual},
                              {"zero_error_residual", inst.zero_error_residual},
                              {"nege", {inst.nege1, inst.nege2}},
                              {"max_sco", {inst.max_sco1, inst.max_sco2}},
                              {"seesaw", {inst.seesaw1, inst.seesaw2}},
                              {"probability_residual",
                               inst.probability_residual},
                              {"pass", inst.pass()},
                              {"failures", inst.failures}};
    out += line.dump();
    out += '\n';
  }
  return out;
}

AuditReport randomized_cert_audit(int count, std::uint64_t seed) {
  if (count < 1) throw InputError("randomized_cert_audit: count must be >= 1");

  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> coin(0, 1);

  AuditReport report;
  report.seed = seed;
  report.count = count;
  report.instances.reserve(static_cast<std::size_t>(count));

  for (int i = 0; i < count; ++i) {
    const bool use_ms = coin(gen) == 1;
    const double draw = unit(gen);
    const ClassParameter cls = use_ms ? ClassParameter::ms(0.5 * (1.0 - draw))
                                      : ClassParameter::mks(1.0 - draw);
    const double s = cls.s();
    const double factor = use_ms ? 4.0 * s * s : cls.t();
    const double x = unit(gen);
    const double y_max =
        x > 0.0 ? factor * (1.0 - x) / (x + factor * (1.0 - x)) : 1.0;
    const double y = y_max * unit(gen);

    AuditInstance inst;
    inst.index = i;
    inst.class_label = cls.label();
    inst.parameter = use_ms ? s : cls.t();
    inst.alpha1 = 1.0 - x;
    inst.alpha2 = 1.0 - y;
    inst.x = x;
    inst.y = y;

    const CanonicalForm cf = canonical_form_from_alphas(inst.alpha1, inst.alpha2);
    const DiscriminationResult res = discriminate(cf, cls);
    if (res.certificate)
      inst.branch = branch_label(res.certificate->branch);
    if (res.report) {
      inst.unit_residual = res.report->unit_residual;
      inst.zero_error_residual = res.report->zero_error_residual;
      inst.nege1 = res.report->element1.nege_value;
      inst.nege2 = res.report->element2.nege_value;
      inst.max_sco1 = res.report->element1.max_term_sco;
      inst.max_sco2 = res.report->element2.max_term_sco;
    }
    if (res.probabilities) {
      for (int row = 0; row < 2; ++row)
        for (int col = 0; col < 2; ++col)
          inst.probability_residual = std::max(
              inst.probability_residual,
              std::abs((*res.probabilities)[row][col] - (row == col ? 1.0 : 0.0)));
    }
    if (!res.guaranteed)
      inst.failures.push_back("pipeline: " + res.reason);

    if (res.certificate) {
      SeesawConfig cfg;
      cfg.seed = seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(i) + 1));
      const HermitianOperator elements[] = {res.certificate->m1(),
                                            res.certificate->m2()};
      double* slots[] = {&inst.seesaw1, &inst.seesaw2};
      for (int e = 0; e < 2; ++e) {
        cfg.seed += static_cast<std::uint64_t>(e);
        const ProductMinResult found = min_product_expectation(elements[e], cfg);
        *slots[e] = found.value;
        if (found.value < -1e-7)
          inst.failures.push_back("seesaw: element " + std::to_string(e + 1) +
                                  " has product expectation " +
                                  std::to_string(found.value));
      }
    }
    report.instances.push_back(std::move(inst));
  }
  return report;
}

}  // namespace gptd
