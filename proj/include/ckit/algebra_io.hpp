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

#include <filesystem>
#include <string>
#include <string_view>

#include "ckit/algebra.hpp"

namespace ckit {

/// Reads `{"size": n, "ops": [{"name": .., "arity": .., "table": [..]}]}`.
/// Throws ParseError (with line/column where known) on malformed input and
/// ValidationError when the tables break an algebra invariant.
FiniteAlgebra parse_algebra(std::string_view text);
FiniteAlgebra load_algebra(const std::filesystem::path& path);

/// Keys in the order size, ops; ops in algebra order.
std::string serialize_algebra(const FiniteAlgebra& algebra);

}  // namespace ckit
