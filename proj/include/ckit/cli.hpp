/*
 * Copyright 2026 commutator-kit contributors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ckit/algebra.hpp"

namespace ckit::cli {

enum class Command { compute, table, con, witness, check };
enum class Format { text, json };

struct RunConfig {
    Command command = Command::compute;
    std::string algebra_path;
    std::optional<std::string> alpha_spec;
    std::optional<std::string> beta_spec;
    std::optional<std::string> gamma_spec;
    std::optional<Element> witness_x;
    std::optional<Element> witness_y;
    Format output_format = Format::text;
    bool oracle = false;
    bool generate = false;
    bool parallel = false;
    bool debug_asserts = false;
};

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kSemanticError = 2,
    kInternalError = 3,
};

/// Executes one command. Results go to `out`, diagnostics to `err`.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs.
int run_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ckit::cli
