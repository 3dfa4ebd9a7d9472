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

// OpenMP versions of the data-parallel kernels. Each returns exactly what its
// serial counterpart returns, regardless of thread count or schedule; the
// serial functions stay the reference the tests compare against.

#include "ckit/algebra.hpp"
#include "ckit/commutator.hpp"
#include "ckit/relations.hpp"

namespace ckit::par {

/// Number of threads the kernels will use (1 without OpenMP).
int max_threads() noexcept;

/// Induced tables filled in parallel over the flat table index.
PairAlgebra make_pair_algebra(const FiniteAlgebra& algebra, const Partition& beta);

/// Principal congruences computed in parallel, then joined to a fixpoint.
std::vector<Partition> con_lattice(const FiniteAlgebra& algebra);

/// One cell per task.
CommutatorTable commutator_table(const FiniteAlgebra& algebra);

}  // namespace ckit::par
