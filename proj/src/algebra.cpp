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

#include "ckit/algebra.hpp"

#include <limits>
#include <set>
#include <sstream>

#include "ckit/relations.hpp"

namespace ckit {

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error([&] {
          std::ostringstream msg;
          msg << "invalid algebra:";
          for (const auto& v : violations) {
              msg << "\n  ";
              if (!v.op.empty()) msg << "op '" << v.op << "': ";
              msg << v.message;
          }
          return msg.str();
      }()),
      violations_(std::move(violations)) {}

const Operation& FiniteAlgebra::op(std::size_t i) const {
    if (i >= ops_.size()) {
        throw IndexError("operation index " + std::to_string(i) + " out of range (" +
                         std::to_string(ops_.size()) + " operations)");
    }
    return ops_[i];
}

Element FiniteAlgebra::eval(std::size_t op_index, std::span<const Element> args) const {
    const Operation& f = op(op_index);
    if (args.size() != f.arity) {
        throw ArityError("operation '" + f.name + "' has arity " + std::to_string(f.arity) +
                         ", got " + std::to_string(args.size()) + " arguments");
    }
    std::size_t idx = 0;
    for (Element x : args) {
        if (x >= size_) {
            throw DomainError("element " + std::to_string(x) + " out of range 0.." +
                              std::to_string(size_ == 0 ? 0 : size_ - 1));
        }
        idx = idx * size_ + x;
    }
    return f.table.at(idx);
}

std::size_t checked_power(std::size_t n, std::size_t k) noexcept {
    std::size_t r = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (n != 0 && r > std::numeric_limits<std::size_t>::max() / n) return 0;
        r *= n;
    }
    return r;
}

std::vector<Violation> validate(const FiniteAlgebra& algebra) {
    std::vector<Violation> out;
    const std::size_t n = algebra.size();
    if (n == 0) out.push_back({"", 0, "universe must be nonempty"});

    std::set<std::string> names;
    for (const auto& f : algebra.ops()) {
        if (!names.insert(f.name).second) {
            out.push_back({f.name, 0, "duplicate operation name '" + f.name + "'"});
        }
        const std::size_t expected = checked_power(n, f.arity);
        if (f.table.size() != expected) {
            out.push_back({f.name, f.table.size(),
                           "table length " + std::to_string(f.table.size()) +
                               " ≠ " + std::to_string(expected)});
        }
        for (std::size_t i = 0; i < f.table.size(); ++i) {
            if (f.table[i] >= n) {
                out.push_back({f.name, i,
                               "entry " + std::to_string(f.table[i]) + " out of range at index " +
                                   std::to_string(i)});
            }
        }
    }
    return out;
}

FiniteAlgebra make_algebra(std::size_t size, std::vector<Operation> ops) {
    FiniteAlgebra a(size, std::move(ops));
    if (auto v = validate(a); !v.empty()) throw ValidationError(std::move(v));
    return a;
}

bool PairAlgebra::contains(Element a, Element b) const {
    const std::size_t n = base_.size();
    return a < n && b < n && index_[a * n + b] != npos;
}

Element PairAlgebra::index_of(Element a, Element b) const {
    if (!contains(a, b)) {
        throw DomainError("pair (" + std::to_string(a) + "," + std::to_string(b) +
                          ") is not in the pair algebra universe");
    }
    return static_cast<Element>(index_[a * base_.size() + b]);
}

namespace detail {

std::vector<PairAlgebra::Pair> pair_universe(const Partition& beta) {
    const std::size_t n = beta.size();
    std::vector<PairAlgebra::Pair> universe;
    universe.reserve(beta.num_pairs());
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            if (beta.related(a, b)) universe.emplace_back(a, b);
        }
    }
    return universe;
}

std::vector<std::int32_t> pair_index(std::size_t n, const std::vector<PairAlgebra::Pair>& universe) {
    std::vector<std::int32_t> index(n * n, PairAlgebra::npos);
    for (std::size_t i = 0; i < universe.size(); ++i) {
        index[universe[i].first * n + universe[i].second] = static_cast<std::int32_t>(i);
    }
    return index;
}

void check_pair_algebra_inputs(const FiniteAlgebra& algebra, const Partition& beta) {
    if (beta.size() != algebra.size()) {
        throw SizeMismatch("partition on " + std::to_string(beta.size()) +
                           " elements, algebra has " + std::to_string(algebra.size()));
    }
    if (!is_congruence(algebra, beta)) {
        throw NotACongruence("beta = " + format_partition(beta) + " is not a congruence");
    }
}

}  // namespace detail

PairAlgebra make_pair_algebra(const FiniteAlgebra& algebra, const Partition& beta) {
    detail::check_pair_algebra_inputs(algebra, beta);
    const std::size_t n = algebra.size();
    auto universe = detail::pair_universe(beta);
    auto index = detail::pair_index(n, universe);
    const std::size_t m = universe.size();

    std::vector<Operation> induced;
    induced.reserve(algebra.num_ops());
    std::vector<std::size_t> digits;
    for (const auto& f : algebra.ops()) {
        const std::size_t k = f.arity;
        Operation g{f.name, k, std::vector<Element>(checked_power(m, k))};
        // Odometer over index tuples, last position fastest.
        digits.assign(k, 0);
        for (std::size_t flat = 0; flat < g.table.size(); ++flat) {
            std::size_t left = 0, right = 0;
            for (std::size_t d : digits) {
                left = left * n + universe[d].first;
                right = right * n + universe[d].second;
            }
            g.table[flat] = static_cast<Element>(index[f.table[left] * n + f.table[right]]);
            for (std::size_t pos = k; pos-- > 0;) {
                if (++digits[pos] < m) break;
                digits[pos] = 0;
            }
        }
        induced.push_back(std::move(g));
    }
    return PairAlgebra(algebra, std::move(universe), std::move(index),
                       FiniteAlgebra(m, std::move(induced)));
}

}  // namespace ckit
