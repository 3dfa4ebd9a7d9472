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

#include "ckit/relations.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "table_walk.hpp"

namespace ckit {

namespace {

void require_same_size(std::size_t a, std::size_t b) {
    if (a != b) {
        throw SizeMismatch("relations on " + std::to_string(a) + " and " + std::to_string(b) +
                           " elements");
    }
}

void require_in_range(Element x, std::size_t n) {
    if (x >= n) {
        throw DomainError("element " + std::to_string(x) + " out of range for universe of size " +
                          std::to_string(n));
    }
}

// Minimal union-find; congruence.cpp has the instrumented one.
struct Forest {
    std::vector<Element> parent;
    explicit Forest(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), Element{0}); }
    Element find(Element x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(Element x, Element y) {
        x = find(x);
        y = find(y);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
    }
};

}  // namespace

Partition Partition::from_blocks(std::size_t n, const std::vector<std::vector<Element>>& blocks) {
    std::vector<Element> label(n);
    std::iota(label.begin(), label.end(), Element{0});
    std::vector<bool> seen(n, false);
    for (const auto& block : blocks) {
        for (Element x : block) {
            require_in_range(x, n);
            if (seen[x]) throw DomainError("element " + std::to_string(x) + " appears twice");
            seen[x] = true;
            label[x] = block.front();
        }
    }
    return from_labels(label);
}

std::size_t Partition::num_blocks() const noexcept {
    std::size_t c = 0;
    for (std::size_t x = 0; x < rep_.size(); ++x) c += rep_[x] == x;
    return c;
}

std::vector<std::vector<Element>> Partition::blocks() const {
    std::vector<std::vector<Element>> out;
    std::vector<std::size_t> slot(rep_.size());
    for (std::size_t x = 0; x < rep_.size(); ++x) {
        if (rep_[x] == x) {
            slot[x] = out.size();
            out.push_back({static_cast<Element>(x)});
        } else {
            out[slot[rep_[x]]].push_back(static_cast<Element>(x));
        }
    }
    return out;
}

std::size_t Partition::num_pairs() const noexcept {
    std::vector<std::size_t> count(rep_.size(), 0);
    for (Element r : rep_) ++count[r];
    std::size_t total = 0;
    for (std::size_t c : count) total += c * c;
    return total;
}

bool Partition::leq(const Partition& other) const {
    require_same_size(size(), other.size());
    for (std::size_t x = 0; x < rep_.size(); ++x) {
        if (!other.related(static_cast<Element>(x), rep_[x])) return false;
    }
    return true;
}

Partition zero(std::size_t n) {
    if (n == 0) throw DomainError("universe must be nonempty");
    std::vector<Element> labels(n);
    std::iota(labels.begin(), labels.end(), Element{0});
    return Partition::from_labels(labels);
}

Partition one(std::size_t n) {
    if (n == 0) throw DomainError("universe must be nonempty");
    return Partition::from_labels(std::vector<Element>(n, 0));
}

Partition meet(const Partition& p, const Partition& q) {
    require_same_size(p.size(), q.size());
    std::vector<std::pair<Element, Element>> labels(p.size());
    for (Element x = 0; x < p.size(); ++x) labels[x] = {p.rep(x), q.rep(x)};
    return Partition::from_labels(labels);
}

Partition join(const Partition& p, const Partition& q) {
    require_same_size(p.size(), q.size());
    Forest f(p.size());
    for (Element x = 0; x < p.size(); ++x) {
        f.unite(x, p.rep(x));
        f.unite(x, q.rep(x));
    }
    std::vector<Element> labels(p.size());
    for (Element x = 0; x < p.size(); ++x) labels[x] = f.find(x);
    return Partition::from_labels(labels);
}

std::vector<Element> class_of(const Partition& p, Element a) {
    require_in_range(a, p.size());
    std::vector<Element> out;
    for (Element x = 0; x < p.size(); ++x) {
        if (p.related(x, a)) out.push_back(x);
    }
    return out;
}

Partition parse_partition(std::string_view text, std::size_t n) {
    std::vector<std::vector<Element>> blocks;
    std::vector<bool> seen(n, false);
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t bar = text.find('|', start);
        if (bar == std::string_view::npos) bar = text.size();
        std::istringstream in{std::string(text.substr(start, bar - start))};
        std::vector<Element> block;
        std::string token;
        while (in >> token) {
            if (!std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
                token.size() > 9) {
                throw ParseError("partition: bad element '" + token + "'");
            }
            const auto x = static_cast<Element>(std::stoul(token));
            if (x >= n) {
                throw ParseError("partition: element " + token + " out of range for size " +
                                 std::to_string(n));
            }
            if (seen[x]) throw ParseError("partition: element " + token + " listed twice");
            seen[x] = true;
            block.push_back(x);
        }
        if (!block.empty()) blocks.push_back(std::move(block));
        start = bar + 1;
    }
    return Partition::from_blocks(n, blocks);
}

std::string format_partition(const Partition& p) {
    std::string out;
    bool first_block = true;
    for (const auto& block : p.blocks()) {
        if (!first_block) out += '|';
        first_block = false;
        for (std::size_t i = 0; i < block.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(block[i]);
        }
    }
    return out;
}

Tolerance::Tolerance(std::size_t n) : n_(n), adj_(n * n, 0) {
    for (std::size_t x = 0; x < n; ++x) adj_[x * n + x] = 1;
}

Tolerance Tolerance::from_pairs(std::size_t n, const std::vector<std::pair<Element, Element>>& pairs) {
    Tolerance t(n);
    for (auto [x, y] : pairs) {
        require_in_range(x, n);
        require_in_range(y, n);
        t.add(x, y);
    }
    return t;
}

Tolerance Tolerance::from_partition(const Partition& p) {
    Tolerance t(p.size());
    for (Element x = 0; x < p.size(); ++x) {
        for (Element y = 0; y < p.size(); ++y) {
            if (p.related(x, y)) t.adj_[x * t.n_ + y] = 1;
        }
    }
    return t;
}

Tolerance Tolerance::full(std::size_t n) {
    Tolerance t(n);
    std::fill(t.adj_.begin(), t.adj_.end(), 1);
    return t;
}

void Tolerance::add(Element x, Element y) {
    adj_[x * n_ + y] = 1;
    adj_[y * n_ + x] = 1;
}

bool Tolerance::leq(const Tolerance& other) const {
    require_same_size(n_, other.n_);
    for (std::size_t i = 0; i < adj_.size(); ++i) {
        if (adj_[i] && !other.adj_[i]) return false;
    }
    return true;
}

bool Tolerance::is_transitive() const {
    for (std::size_t x = 0; x < n_; ++x) {
        for (std::size_t y = 0; y < n_; ++y) {
            if (!adj_[x * n_ + y]) continue;
            for (std::size_t z = 0; z < n_; ++z) {
                if (adj_[y * n_ + z] && !adj_[x * n_ + z]) return false;
            }
        }
    }
    return true;
}

Partition Tolerance::to_partition() const {
    if (!is_transitive()) throw DomainError("tolerance is not transitive");
    std::vector<Element> labels(n_);
    for (std::size_t x = 0; x < n_; ++x) {
        std::size_t y = 0;
        while (!adj_[x * n_ + y]) ++y;
        labels[x] = static_cast<Element>(y);
    }
    return Partition::from_labels(labels);
}

std::size_t Tolerance::num_pairs() const noexcept {
    return static_cast<std::size_t>(std::count(adj_.begin(), adj_.end(), 1));
}

Tolerance meet_tol(const Tolerance& s, const Tolerance& t) {
    require_same_size(s.size(), t.size());
    Tolerance out(s.size());
    for (Element x = 0; x < s.size(); ++x) {
        for (Element y = x + 1; y < s.size(); ++y) {
            if (s.contains(x, y) && t.contains(x, y)) out.add(x, y);
        }
    }
    return out;
}

std::vector<Tolerance> all_tolerances(std::size_t n) {
    if (n > kMaxToleranceEnumeration) {
        throw DomainError("tolerance enumeration is capped at n = " +
                          std::to_string(kMaxToleranceEnumeration) + ", got " + std::to_string(n));
    }
    std::vector<std::pair<Element, Element>> off_diagonal;
    for (Element x = 0; x < n; ++x) {
        for (Element y = x + 1; y < n; ++y) off_diagonal.emplace_back(x, y);
    }
    const std::size_t count = std::size_t{1} << off_diagonal.size();
    std::vector<Tolerance> out;
    out.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
        Tolerance t(n);
        for (std::size_t i = 0; i < off_diagonal.size(); ++i) {
            if (mask >> i & 1) t.add(off_diagonal[i].first, off_diagonal[i].second);
        }
        out.push_back(std::move(t));
    }
    return out;
}

PairSet::PairSet(std::size_t n, std::vector<Pair> pairs) : n_(n), pairs_(std::move(pairs)) {
    for (auto [a, b] : pairs_) {
        require_in_range(a, n);
        require_in_range(b, n);
    }
    std::sort(pairs_.begin(), pairs_.end());
    pairs_.erase(std::unique(pairs_.begin(), pairs_.end()), pairs_.end());
}

PairSet PairSet::from_partition(const Partition& p) {
    std::vector<Pair> pairs;
    pairs.reserve(p.num_pairs());
    for (Element a = 0; a < p.size(); ++a) {
        for (Element b = 0; b < p.size(); ++b) {
            if (p.related(a, b)) pairs.emplace_back(a, b);
        }
    }
    return PairSet(p.size(), std::move(pairs));
}

bool PairSet::contains(Element a, Element b) const {
    return std::binary_search(pairs_.begin(), pairs_.end(), Pair{a, b});
}

Partition pairwise_product(const Partition& alpha, const Partition& beta) {
    const std::size_t m = alpha.size(), n = beta.size();
    std::vector<Element> labels(m * n);
    for (Element a = 0; a < m; ++a) {
        for (Element b = 0; b < n; ++b) {
            labels[a * n + b] = static_cast<Element>(alpha.rep(a) * n + beta.rep(b));
        }
    }
    return Partition::from_labels(labels);
}

std::vector<Quadruple> relation_product(const Partition& alpha, const Partition& beta) {
    std::vector<Quadruple> out;
    out.reserve(alpha.num_pairs() * beta.num_pairs());
    for (const auto& [a, a2] : PairSet::from_partition(alpha)) {
        for (const auto& [b, b2] : PairSet::from_partition(beta)) out.push_back({a, a2, b, b2});
    }
    return out;
}

bool is_congruence(const FiniteAlgebra& algebra, const Partition& p) {
    require_same_size(algebra.size(), p.size());
    const std::size_t n = algebra.size();
    // Compatibility with the pairs (rep(x), x) implies it for all related
    // pairs by transitivity, and single-position substitutions compose.
    for (const auto& f : algebra.ops()) {
        for (std::size_t pos = 0; pos < f.arity; ++pos) {
            const detail::PositionSlice slice(n, f.arity, pos);
            for (Element x = 0; x < n; ++x) {
                const Element r = p.rep(x);
                if (r == x) continue;
                for (std::size_t j = 0; j < slice.count; ++j) {
                    if (!p.related(f.table[slice.at(j, r)], f.table[slice.at(j, x)])) return false;
                }
            }
        }
    }
    return true;
}

bool is_compatible(const FiniteAlgebra& algebra, const Tolerance& t) {
    require_same_size(algebra.size(), t.size());
    const std::size_t n = algebra.size();
    // Single-position substitutions do not suffice for a non-transitive
    // relation, so walk every pair of argument tuples related coordinatewise.
    std::vector<std::pair<Element, Element>> pairs;
    for (Element x = 0; x < n; ++x) {
        for (Element y = 0; y < n; ++y) {
            if (t.contains(x, y)) pairs.emplace_back(x, y);
        }
    }
    for (const auto& f : algebra.ops()) {
        std::vector<std::size_t> digits(f.arity, 0);
        const std::size_t total = checked_power(pairs.size(), f.arity);
        for (std::size_t step = 0; step < total; ++step) {
            std::size_t left = 0, right = 0;
            for (std::size_t d : digits) {
                left = left * n + pairs[d].first;
                right = right * n + pairs[d].second;
            }
            if (!t.contains(f.table[left], f.table[right])) return false;
            for (std::size_t pos = f.arity; pos-- > 0;) {
                if (++digits[pos] < pairs.size()) break;
                digits[pos] = 0;
            }
        }
    }
    return true;
}

}  // namespace ckit
