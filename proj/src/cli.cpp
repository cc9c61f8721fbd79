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

#include "gptd/cli.hpp"

#include <cerrno>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "gptd/discrimination.hpp"
#include "gptd/io.hpp"
#include "gptd/multicopy.hpp"
#include "gptd/oracle.hpp"

namespace gptd::cli {

namespace {

ClassParameter parse_class(const std::string& name, std::optional<double> s,
                           std::optional<double> t) {
  if (name == "ms") {
    if (!s) throw InputError("--class ms requires --s");
    if (t) throw InputError("--class ms does not take --t");
    return ClassParameter::ms(*s);
  }
  if (name == "mks") {
    if (!t) throw InputError("--class mks requires --t");
    if (s) throw InputError("--class mks does not take --s");
    return ClassParameter::mks(*t);
  }
  throw InputError("--class must be \"ms\" or \"mks\"");
}

struct ClassFlags {
  std::string name;
  std::optional<double> s;
  std::optional<double> t;

  ClassParameter resolve() const { return parse_class(name, s, t); }
};

void add_class_flags(CLI::App* cmd, ClassFlags& flags) {
  cmd->add_option("--class", flags.name, "Measurement class: ms or mks")
      ->required();
  auto* s_opt =
      cmd->add_option("--s", flags.s, "Negativity bound s in [0, 1/2] (ms)");
  auto* t_opt =
      cmd->add_option("--t", flags.t, "Schmidt budget t in [0, 1] (mks)");
  s_opt->excludes(t_opt);
}

const char* verdict_word(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

std::uint64_t default_seed() {
  const char* env = std::getenv("GPTD_SEED");
  if (!env || !*env) return 1;
  if (*env == '-')
    throw InputError("GPTD_SEED must be a nonnegative integer");
  errno = 0;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(env, &end, 10);
  if (errno != 0 || end == env || *end != '\0')
    throw InputError("GPTD_SEED must be a nonnegative integer");
  return static_cast<std::uint64_t>(value);
}

int cmd_discriminate(const std::string& states_path, const ClassParameter& cls,
                     const std::string& out_path, std::ostream& out,
                     std::ostream& err) {
  const io::StateInput states = io::states_from_json(io::load_json_file(states_path));
  const DiscriminationResult result =
      discriminate(states.a1, states.a2, states.b1, states.b2, cls);

  const std::string payload = io::result_to_json(result).dump(2) + "\n";
  if (out_path.empty()) {
    out << payload;
  } else {
    io::write_text_file(out_path, payload);
    out << (result.guaranteed ? "guaranteed" : "not guaranteed") << "; result written to "
        << out_path << "\n";
  }
  if (!result.guaranteed) err << result.reason << "\n";
  return result.guaranteed ? kExitOk : kExitConditionUnsatisfied;
}

int cmd_min_copies(double overlap, const ClassParameter& cls, std::int64_t cap,
                   std::ostream& out, std::ostream&) {
  const MinCopiesResult result = min_copies({overlap, cls}, cap);
  out << "n=" << result.n << " total=" << result.total_copies << "\n";
  return kExitOk;
}

int cmd_region(const ClassParameter& cls, int grid_points,
               const std::string& out_path, std::ostream& out, std::ostream&) {
  const std::string csv = io::region_to_csv(region_boundary(cls, grid_points), cls);
  if (out_path.empty())
    out << csv;
  else
    io::write_text_file(out_path, csv);
  return kExitOk;
}

int cmd_verify(const std::string& measurement_path,
               const std::string& states_path, const ClassParameter& cls,
               std::ostream& out, std::ostream&) {
  io::Json measurement_json = io::load_json_file(measurement_path);
  if (measurement_json.is_object() && measurement_json.contains("certificate"))
    measurement_json = measurement_json["certificate"];
  const MeasurementCertificate cert = io::measurement_from_json(measurement_json);

  const io::StateInput states = io::states_from_json(io::load_json_file(states_path));
  const CanonicalForm cf =
      canonical_reduction(states.a1, states.a2, states.b1, states.b2);
  if (!(cf.dims() == cert.t1.dims()))
    throw InputError("certificate dimensions do not match the state file");

  const VerificationReport report = verify_measurement(
      cert, cf.rho1_canonical(), cf.rho2_canonical(), cls);

  out << "unit: " << verdict_word(report.unit_ok) << " (residual "
      << io::format_significant(report.unit_residual, 6) << ")\n";
  out << "cone: " << verdict_word(report.cone_ok) << " (nege M1 "
      << io::format_significant(report.element1.nege_value, 6) << ", M2 "
      << io::format_significant(report.element2.nege_value, 6) << ")\n";
  if (!report.element1.membership.valid)
    out << "  M1: " << report.element1.membership.reason << "\n";
  if (!report.element2.membership.valid)
    out << "  M2: " << report.element2.membership.reason << "\n";
  out << "zero_error: " << verdict_word(report.zero_error_ok) << " (residual "
      << io::format_significant(report.zero_error_residual, 6) << ")\n";
  out << "overall: " << verdict_word(report.pass()) << "\n";
  return report.pass() ? kExitOk : kExitVerificationFailed;
}

int cmd_audit(int count, std::uint64_t seed, std::ostream& out,
              std::ostream& err) {
  const AuditReport report = randomized_cert_audit(count, seed);
  out << report.to_json_lines();
  const int failures = report.failure_count();
  if (failures == 0) return kExitOk;
  err << failures << " audited instance(s) failed\n";
  return kExitVerificationFailed;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Constructs, certifies, and verifies perfect-discrimination "
               "measurements of the classes M_s and M(K_s)"};
  app.name("gptd");
  app.require_subcommand(1);

  std::function<int()> action;

  auto* discriminate_cmd = app.add_subcommand(
      "discriminate", "Decide guaranteed discriminability of two product states");
  std::string states_path;
  std::string disc_out;
  ClassFlags disc_class;
  discriminate_cmd->add_option("states", states_path, "State file (JSON)")
      ->required();
  add_class_flags(discriminate_cmd, disc_class);
  discriminate_cmd->add_option("--out", disc_out, "Write the result JSON here");
  discriminate_cmd->callback([&] {
    action = [&] {
      return cmd_discriminate(states_path, disc_class.resolve(), disc_out, out,
                              err);
    };
  });

  auto* min_copies_cmd = app.add_subcommand(
      "min-copies", "Minimum copy count n for x = y = c^n to become feasible");
  double overlap = 0.0;
  std::int64_t cap = kDefaultCopySearchCap;
  ClassFlags copies_class;
  min_copies_cmd->add_option("--overlap", overlap, "Single-copy overlap c in [0, 1)")
      ->required();
  add_class_flags(min_copies_cmd, copies_class);
  min_copies_cmd->add_option("--cap", cap, "Search cap for n");
  min_copies_cmd->callback([&] {
    action = [&] {
      return cmd_min_copies(overlap, copies_class.resolve(), cap, out, err);
    };
  });

  auto* region_cmd = app.add_subcommand(
      "region", "Feasibility-region boundary as CSV over a uniform x grid");
  int grid_points = 101;
  std::string region_out;
  ClassFlags region_class;
  add_class_flags(region_cmd, region_class);
  region_cmd->add_option("--grid", grid_points, "Number of grid points (>= 2)");
  region_cmd->add_option("--out", region_out, "Write the CSV here");
  region_cmd->callback([&] {
    action = [&] {
      return cmd_region(region_class.resolve(), grid_points, region_out, out,
                        err);
    };
  });

  auto* verify_cmd = app.add_subcommand(
      "verify", "Check a measurement certificate against a state file");
  std::string measurement_path;
  std::string verify_states_path;
  ClassFlags verify_class;
  verify_cmd
      ->add_option("--measurement", measurement_path, "Certificate JSON file")
      ->required();
  verify_cmd->add_option("--states", verify_states_path, "State file (JSON)")
      ->required();
  add_class_flags(verify_cmd, verify_class);
  verify_cmd->callback([&] {
    action = [&] {
      return cmd_verify(measurement_path, verify_states_path,
                        verify_class.resolve(), out, err);
    };
  });

  auto* audit_cmd = app.add_subcommand(
      "audit", "Randomized end-to-end certificate audit (JSON lines)");
  int count = 0;
  std::optional<std::uint64_t> seed_flag;
  audit_cmd->add_option("--count", count, "Number of random instances")
      ->required();
  audit_cmd->add_option("--seed", seed_flag,
                        "RNG seed (default: GPTD_SEED or 1)");
  audit_cmd->callback([&] {
    action = [&] {
      return cmd_audit(count, seed_flag ? *seed_flag : default_seed(), out, err);
    };
  });

  std::vector<std::string> full_args;
  full_args.reserve(args.size() + 1);
  full_args.push_back("gptd");
  full_args.insert(full_args.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full_args.size());
  for (const auto& arg : full_args) argv.push_back(arg.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    return action ? action() : kExitInputError;
  } catch (const IdenticalStatesError& e) {
    err << "not discriminable: " << e.what() << "\n";
    return kExitConditionUnsatisfied;
  } catch (const ConditionNotSatisfiedError& e) {
    err << e.what() << "\n";
    return kExitConditionUnsatisfied;
  } catch (const ZeroParameterError& e) {
    err << "impossible: " << e.what() << "\n";
    return kExitImpossible;
  } catch (const SearchCapExceededError& e) {
    err << e.what() << "\n";
    return kExitInputError;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  }
}

int run(int argc, char** argv) {
  std::vector<std::string> args;
  args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, std::cout, std::cerr);
}

}  // namespace gptd::cli
