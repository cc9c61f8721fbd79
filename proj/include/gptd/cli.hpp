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

#ifndef GPTD_CLI_HPP
#define GPTD_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gptd/class_parameter.hpp"
#include "gptd/types.hpp"

namespace gptd::cli {

// Exit-code contract, stable across releases.
inline constexpr int kExitOk = 0;                    // success / guaranteed
inline constexpr int kExitInputError = 1;            // bad files or flags
inline constexpr int kExitConditionUnsatisfied = 2;  // sufficient condition fails
inline constexpr int kExitImpossible = 3;            // no finite answer at parameter
inline constexpr int kExitVerificationFailed = 4;    // certificate check fails

/// Default RNG seed: the GPTD_SEED environment variable when set to a valid
/// nonnegative integer, 1 otherwise.
std::uint64_t default_seed();

// Subcommand bodies. Each writes human/machine output to `out`, diagnostics
// to `err`, and returns an exit code; exceptions from bad inputs are mapped
// by run().

int cmd_discriminate(const std::string& states_path, const ClassParameter& cls,
                     const std::string& out_path, std::ostream& out,
                     std::ostream& err);

int cmd_min_copies(double overlap, const ClassParameter& cls, std::int64_t cap,
                   std::ostream& out, std::ostream& err);

int cmd_region(const ClassParameter& cls, int grid_points,
               const std::string& out_path, std::ostream& out,
               std::ostream& err);

int cmd_verify(const std::string& measurement_path,
               const std::string& states_path, const ClassParameter& cls,
               std::ostream& out, std::ostream& err);

int cmd_audit(int count, std::uint64_t seed, std::ostream& out,
              std::ostream& err);

/// Full argument parser and dispatcher ("gptd <command> ...").
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);
int run(int argc, char** argv);

}  // namespace gptd::cli

#endif  // GPTD_CLI_HPP
