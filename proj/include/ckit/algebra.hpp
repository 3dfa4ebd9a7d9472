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
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ckit/errors.hpp"

namespace ckit {

class Partition;

/// Elements of a finite universe are the integers 0..n-1.
using Element = std::uint32_t;

/// A basic operation given by its full table. Row-major with the last
/// argument varying fastest, so for arity k the entry for (x_1..x_k) sits at
/// x_1*n^(k-1) + ... + x_k.
struct Operation {
    std::string name;
    std::size_t arity = 0;
    std::vector<Element> table;

    friend bool operator==(const Operation&, const Operation&) = default;
};

/// A finite algebra: universe {0..size-1} plus operation tables.
///
/// Construction does not validate; use make_algebra() or validate() when the
/// tables come from outside.
class FiniteAlgebra {
public:
    FiniteAlgebra() = default;
    FiniteAlgebra(std::size_t size, std::vector<Operation> ops)
        : size_(size), ops_(std::move(ops)) {}

    std::size_t size() const noexcept { return size_; }
    std::size_t num_ops() const noexcept { return ops_.size(); }
    const std::vector<Operation>& ops() const noexcept { return ops_; }
    const Operation& op(std::size_t i) const;

    /// Checked table lookup.
    Element eval(std::size_t op_index, std::span<const Element> args) const;
    Element eval(std::size_t op_index, std::initializer_list<Element> args) const {
        return eval(op_index, std::span<const Element>(args.begin(), args.size()));
    }

    friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;

private:
    std::size_t size_ = 0;
    std::vector<Operation> ops_;
};

/// n^k, or 0 if it does not fit in size_t.
std::size_t checked_power(std::size_t n, std::size_t k) noexcept;

/// Every broken invariant of A; empty means valid.
std::vector<Violation> validate(const FiniteAlgebra& algebra);

/// Builds and validates; throws ValidationError.
FiniteAlgebra make_algebra(std::size_t size, std::vector<Operation> ops);

/// The subalgebra of A x A whose universe is the congruence beta.
///
/// Pairs are listed lexicographically and the induced operations are
/// materialized as ordinary tables over pair indices, so the result can be
/// fed to any routine that accepts a FiniteAlgebra.
class PairAlgebra {
public:
    using Pair = std::pair<Element, Element>;
    static constexpr std::int32_t npos = -1;

    PairAlgebra() = default;
    PairAlgebra(FiniteAlgebra base, std::vector<Pair> universe, std::vector<std::int32_t> index,
                FiniteAlgebra induced)
        : base_(std::move(base)), universe_(std::move(universe)), index_(std::move(index)),
          induced_(std::move(induced)) {}

    const FiniteAlgebra& base() const noexcept { return base_; }
    const FiniteAlgebra& algebra() const noexcept { return induced_; }
    const std::vector<Pair>& universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return universe_.size(); }

    const Pair& pair(std::size_t i) const { return universe_.at(i); }
    bool contains(Element a, Element b) const;
    /// Index of (a,b); throws DomainError when (a,b) is not in beta.
    Element index_of(Element a, Element b) const;

private:
    FiniteAlgebra base_;
    std::vector<Pair> universe_;
    std::vector<std::int32_t> index_;  // a*n+b -> position, npos if absent
    FiniteAlgebra induced_;
};

/// Throws NotACongruence if beta is not compatible with A.
PairAlgebra make_pair_algebra(const FiniteAlgebra& algebra, const Partition& beta);

namespace detail {
// Shared by the serial and OpenMP builders.
std::vector<PairAlgebra::Pair> pair_universe(const Partition& beta);
std::vector<std::int32_t> pair_index(std::size_t n, const std::vector<PairAlgebra::Pair>& universe);
void check_pair_algebra_inputs(const FiniteAlgebra& algebra, const Partition& beta);
}  // namespace detail

}  // namespace ckit
