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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ckit/algebra.hpp"
#include "ckit/congruence.hpp"
#include "ckit/relations.hpp"

namespace ckit {

/// Everything derived from one (alpha, beta): the pair algebra on beta, the
/// generating set D_alpha over pair indices and the congruence Delta it
/// generates there. Built once and shared by psi, commutator and
/// term_condition.
struct DeltaContext {
    PairAlgebra pair_algebra;
    Partition alpha;
    Partition beta;
    PairSet generators;  // {(idx(a,a), idx(b,b)) : a alpha b}
    Partition delta;     // over pair indices

    std::size_t base_size() const noexcept { return alpha.size(); }
};

/// D_alpha as index pairs of the pair algebra on beta.
PairSet d_alpha(const FiniteAlgebra& algebra, const Partition& alpha, const Partition& beta);
/// Same, when the pair algebra is already built.
PairSet d_alpha(const PairAlgebra& pair_algebra, const Partition& alpha);

/// Throws NotACongruence if alpha or beta is not a congruence of A.
DeltaContext delta(const FiniteAlgebra& algebra, const Partition& alpha, const Partition& beta);

/// T together with every (x,y) that is Delta-related to some pair of T that
/// lies in beta.
Tolerance psi(const DeltaContext& ctx, const Tolerance& t);

/// Union of the Delta-classes of the diagonal pairs, read back on A.
/// Throws InternalInvariantViolation if the result is not transitive, or
/// (with debug asserts on) not compatible.
Partition commutator(const DeltaContext& ctx);
Partition commutator(const FiniteAlgebra& algebra, const Partition& alpha, const Partition& beta);

/// Meet of every tolerance T with psi(T) <= T. |A| <= 5.
Tolerance lfp_by_meet(const FiniteAlgebra& algebra, const Partition& alpha, const Partition& beta);
/// Same meet restricted to tolerances compatible with A.
Tolerance lfp_by_meet_compatible(const FiniteAlgebra& algebra, const Partition& alpha,
                                 const Partition& beta);

/// C(alpha, beta; gamma) as gamma-homogeneity of every Delta-class.
bool term_condition(const DeltaContext& ctx, const Partition& gamma);
bool term_condition(const FiniteAlgebra& algebra, const Partition& alpha, const Partition& beta,
                    const Partition& gamma);

/// A failing instance of the term condition: t(a,u) gamma t(a,v) holds on
/// exactly one of the rows a, b.
struct TermConditionFailure {
    std::vector<Element> polynomial;  // table of t, arity 1 + u.size()
    Element a = 0;
    Element b = 0;
    std::vector<Element> u;
    std::vector<Element> v;
};

/// The polynomial functions of A of the given arity, each as a table in the
/// usual row-major layout. Throws DomainError if the clone outgrows
/// kMaxPolynomialClone.
std::vector<std::vector<Element>> polynomial_functions(const FiniteAlgebra& algebra,
                                                       std::size_t arity);
constexpr std::size_t kMaxPolynomialClone = 4096;

/// Checks the term condition literally, for every polynomial t of arity
/// 1 + max_env_arity. A failure is definitive; success is evidence bounded
/// by the arity. max_env_arity <= 2, and |A| <= 3 when it is 2.
std::optional<TermConditionFailure> find_term_condition_failure(const FiniteAlgebra& algebra,
                                                                const Partition& alpha,
                                                                const Partition& beta,
                                                                const Partition& gamma,
                                                                std::size_t max_env_arity);
bool term_condition_bounded(const FiniteAlgebra& algebra, const Partition& alpha,
                            const Partition& beta, const Partition& gamma,
                            std::size_t max_env_arity);

bool is_abelian(const FiniteAlgebra& algebra);

struct CommutatorTable {
    std::vector<Partition> congruences;     // con_lattice order
    std::vector<std::vector<Partition>> cells;  // cells[i][j] = [theta_i, theta_j]

    friend bool operator==(const CommutatorTable&, const CommutatorTable&) = default;
};

CommutatorTable commutator_table(const FiniteAlgebra& algebra);

/// A Mal'cev chain in the pair algebra from some diagonal (a,a) to (x,y),
/// generated by D_alpha. Throws NotInCongruence if (x,y) is not in the
/// commutator.
WitnessChain commutator_witness(const DeltaContext& ctx, Element x, Element y);

/// `{"blocks": [[..],[..]]}`
std::string partition_to_json(const Partition& p);
/// Delta as a partition over the pair index, with the pair list.
std::string delta_to_json(const DeltaContext& ctx);

}  // namespace ckit
