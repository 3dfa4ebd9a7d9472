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

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ckit/algebra.hpp"

namespace ckit {

/// An equivalence relation on {0..n-1}, stored as the least element of each
/// element's block. Two partitions are equal iff their rep arrays are.
class Partition {
public:
    Partition() = default;

    /// Canonicalizes an arbitrary block labelling: elements with equal labels
    /// share a block.
    template <typename Label>
    static Partition from_labels(const std::vector<Label>& labels);

    static Partition from_blocks(std::size_t n, const std::vector<std::vector<Element>>& blocks);

    std::size_t size() const noexcept { return rep_.size(); }
    Element rep(Element x) const { return rep_.at(x); }
    const std::vector<Element>& reps() const noexcept { return rep_; }
    bool related(Element x, Element y) const { return rep_.at(x) == rep_.at(y); }

    std::size_t num_blocks() const noexcept;
    /// Blocks sorted by least element, each sorted ascending.
    std::vector<std::vector<Element>> blocks() const;
    /// Number of related ordered pairs, sum of |B|^2.
    std::size_t num_pairs() const noexcept;

    /// Containment as relations.
    bool leq(const Partition& other) const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    explicit Partition(std::vector<Element> canonical) : rep_(std::move(canonical)) {}
    std::vector<Element> rep_;
};

template <typename Label>
Partition Partition::from_labels(const std::vector<Label>& labels) {
    std::vector<Element> rep(labels.size());
    std::map<Label, Element> first;
    for (std::size_t x = 0; x < labels.size(); ++x) {
        rep[x] = first.try_emplace(labels[x], static_cast<Element>(x)).first->second;
    }
    return Partition(std::move(rep));
}

Partition zero(std::size_t n);
Partition one(std::size_t n);
Partition meet(const Partition& p, const Partition& q);
Partition join(const Partition& p, const Partition& q);
std::vector<Element> class_of(const Partition& p, Element a);

/// Text form `0 2|1 3`; omitted elements are singletons.
Partition parse_partition(std::string_view text, std::size_t n);
/// Every block, singletons included, ordered by least element.
std::string format_partition(const Partition& p);

/// A reflexive symmetric relation on {0..n-1}.
class Tolerance {
public:
    Tolerance() = default;
    explicit Tolerance(std::size_t n);  // the identity relation

    /// Reflexive symmetric closure of the given pairs.
    static Tolerance from_pairs(std::size_t n, const std::vector<std::pair<Element, Element>>& pairs);
    static Tolerance from_partition(const Partition& p);
    static Tolerance full(std::size_t n);

    std::size_t size() const noexcept { return n_; }
    bool contains(Element x, Element y) const { return adj_[x * n_ + y] != 0; }
    /// Adds (x,y) and (y,x).
    void add(Element x, Element y);

    bool leq(const Tolerance& other) const;
    bool is_transitive() const;
    /// Throws DomainError unless transitive.
    Partition to_partition() const;
    std::size_t num_pairs() const noexcept;

    friend bool operator==(const Tolerance&, const Tolerance&) = default;

private:
    std::size_t n_ = 0;
    std::vector<unsigned char> adj_;
};

Tolerance meet_tol(const Tolerance& s, const Tolerance& t);

/// Every tolerance on an n-set, n <= 5. Order: bitmask over the
/// upper-triangle pairs (x<y) in lexicographic order.
std::vector<Tolerance> all_tolerances(std::size_t n);
constexpr std::size_t kMaxToleranceEnumeration = 5;

/// A set of ordered pairs over {0..n-1}, kept sorted and duplicate-free.
class PairSet {
public:
    using Pair = std::pair<Element, Element>;

    PairSet() = default;
    explicit PairSet(std::size_t n) : n_(n) {}
    /// Throws DomainError on out-of-range coordinates.
    PairSet(std::size_t n, std::vector<Pair> pairs);

    static PairSet from_partition(const Partition& p);

    std::size_t universe_size() const noexcept { return n_; }
    std::size_t size() const noexcept { return pairs_.size(); }
    bool empty() const noexcept { return pairs_.empty(); }
    bool contains(Element a, Element b) const;
    const std::vector<Pair>& pairs() const noexcept { return pairs_; }
    auto begin() const noexcept { return pairs_.begin(); }
    auto end() const noexcept { return pairs_.end(); }

    friend bool operator==(const PairSet&, const PairSet&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Pair> pairs_;
};

/// Pairwise product on A x B, with (a,b) encoded as a*|B| + b.
Partition pairwise_product(const Partition& alpha, const Partition& beta);

/// ((a,a'),(b,b')) stored as {a, a', b, b'}.
using Quadruple = std::array<Element, 4>;
/// Cartesian product of alpha and beta as pair sets. Materialized; tests only.
std::vector<Quadruple> relation_product(const Partition& alpha, const Partition& beta);

/// True iff p is compatible with every operation of A.
bool is_congruence(const FiniteAlgebra& algebra, const Partition& p);
/// True iff T is a subuniverse of A x A.
bool is_compatible(const FiniteAlgebra& algebra, const Tolerance& t);

}  // namespace ckit
