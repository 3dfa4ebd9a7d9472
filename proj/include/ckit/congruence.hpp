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
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ckit/algebra.hpp"
#include "ckit/relations.hpp"

namespace ckit {

/// Least congruence of A containing S.
///
/// Union-find seeded with S. Every union that actually merges two classes is
/// pushed on a FIFO worklist; popping (a,b) merges f(..a..) with f(..b..) for
/// every operation f, every argument position and every assignment of the
/// remaining arguments. Elementary translations suffice by Mal'cev's theorem,
/// and the merged pairs span each class, so closing the worklist closes the
/// whole relation.
Partition cg(const FiniteAlgebra& algebra, const PairSet& generators);

Partition principal(const FiniteAlgebra& algebra, Element a, Element b);

/// All congruences of A, ordered by block count (descending) then by
/// rep array. Intended for |A| up to a few dozen.
std::vector<Partition> con_lattice(const FiniteAlgebra& algebra);

/// x |-> f(fixed_args with x spliced in at `position`).
struct TranslationStep {
    std::size_t op_index = 0;
    std::size_t position = 0;
    std::vector<Element> fixed_args;  // arity-1 entries, position removed

    Element apply(const FiniteAlgebra& algebra, Element x) const;

    friend bool operator==(const TranslationStep&, const TranslationStep&) = default;
};

/// One link z_i -> z_{i+1} of a Mal'cev chain: applying `translations`
/// (innermost first) to the generator (u,v) gives (from, to).
struct WitnessLink {
    Element from = 0;
    Element to = 0;
    std::pair<Element, Element> generator;
    std::vector<TranslationStep> translations;

    friend bool operator==(const WitnessLink&, const WitnessLink&) = default;
};

struct WitnessChain {
    std::pair<Element, Element> endpoints;
    std::vector<WitnessLink> links;

    friend bool operator==(const WitnessChain&, const WitnessChain&) = default;
};

/// A chain for target in cg(A, S), read off the union-find provenance.
/// Throws NotInCongruence when the target is not generated.
WitnessChain witness_chain(const FiniteAlgebra& algebra, const PairSet& generators,
                           std::pair<Element, Element> target);

struct ReplayResult {
    bool ok = true;
    std::string diagnostic;  // first failing check when !ok

    explicit operator bool() const noexcept { return ok; }
};

/// Checks every structural and equational invariant of the chain against A and S.
ReplayResult replay(const FiniteAlgebra& algebra, const WitnessChain& chain,
                    const PairSet& generators);

/// `{"endpoints":[x,y],"links":[{"from":..,"to":..,"generator":[u,v],
/// "translations":[{"op":i,"pos":p,"args":[..]}]}]}`
std::string witness_to_json(const WitnessChain& chain);
WitnessChain witness_from_json(std::string_view text);

}  // namespace ckit
