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

#include "ckit/parallel.hpp"

#include <algorithm>
#include <exception>
#include <set>

#ifdef CKIT_HAVE_OPENMP
#include <omp.h>
#endif

#include "ckit/congruence.hpp"

namespace ckit::par {

namespace {

// Exceptions may not leave an OpenMP region; the first one is kept and
// rethrown after the join.
class FirstError {
public:
    template <typename Fn>
    void run(Fn&& fn) noexcept {
        try {
            fn();
        } catch (...) {
#pragma omp critical(ckit_first_error)
            if (!error_) error_ = std::current_exception();
        }
    }
    void rethrow() const {
        if (error_) std::rethrow_exception(error_);
    }

private:
    std::exception_ptr error_;
};

std::vector<Partition> sorted_lattice(const std::set<Partition>& all) {
    std::vector<Partition> out(all.begin(), all.end());
    std::stable_sort(out.begin(), out.end(), [](const Partition& p, const Partition& q) {
        return p.num_blocks() > q.num_blocks();
    });
    return out;
}

}  // namespace

int max_threads() noexcept {
#ifdef CKIT_HAVE_OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

PairAlgebra make_pair_algebra(const FiniteAlgebra& algebra, const Partition& beta) {
    detail::check_pair_algebra_inputs(algebra, beta);
    const std::size_t n = algebra.size();
    auto universe = detail::pair_universe(beta);
    auto index = detail::pair_index(n, universe);
    const std::size_t m = universe.size();

    std::vector<Operation> induced;
    induced.reserve(algebra.num_ops());
    for (const auto& f : algebra.ops()) {
        const std::size_t k = f.arity;
        Operation g{f.name, k, std::vector<Element>(checked_power(m, k))};
        const auto total = static_cast<std::ptrdiff_t>(g.table.size());
        const Element* src = f.table.data();
        Element* dst = g.table.data();
        const auto* pairs = universe.data();
        const auto* idx = index.data();
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t flat = 0; flat < total; ++flat) {
            std::size_t rest = static_cast<std::size_t>(flat);
            std::size_t left = 0, right = 0, scale = 1;
            // digits come out last-position first
            for (std::size_t pos = 0; pos < k; ++pos) {
                const std::size_t d = rest % m;
                rest /= m;
                left += pairs[d].first * scale;
                right += pairs[d].second * scale;
                scale *= n;
            }
            dst[flat] = static_cast<Element>(idx[src[left] * n + src[right]]);
        }
        induced.push_back(std::move(g));
    }
    return PairAlgebra(algebra, std::move(universe), std::move(index),
                       FiniteAlgebra(m, std::move(induced)));
}

std::vector<Partition> con_lattice(const FiniteAlgebra& algebra) {
    const std::size_t n = algebra.size();
    std::vector<std::pair<Element, Element>> targets;
    for (Element a = 0; a < n; ++a) {
        for (Element b = a + 1; b < n; ++b) targets.emplace_back(a, b);
    }
    std::vector<Partition> principals(targets.size());
    FirstError err;
    const auto count = static_cast<std::ptrdiff_t>(targets.size());
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        err.run([&] { principals[i] = principal(algebra, targets[i].first, targets[i].second); });
    }
    err.rethrow();

    std::set<Partition> all(principals.begin(), principals.end());
    all.insert(zero(n));
    std::vector<Partition> frontier(all.begin(), all.end());
    while (!frontier.empty()) {
        const std::vector<Partition> snapshot(all.begin(), all.end());
        const auto rows = static_cast<std::ptrdiff_t>(frontier.size());
        std::vector<std::vector<Partition>> joins(frontier.size());
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < rows; ++i) {
            err.run([&] {
                joins[i].reserve(snapshot.size());
                for (const auto& q : snapshot) joins[i].push_back(join(frontier[i], q));
            });
        }
        err.rethrow();
        std::vector<Partition> fresh;
        for (auto& row : joins) {
            for (auto& j : row) {
                if (all.insert(j).second) fresh.push_back(std::move(j));
            }
        }
        frontier = std::move(fresh);
    }
    return sorted_lattice(all);
}

CommutatorTable commutator_table(const FiniteAlgebra& algebra) {
    CommutatorTable table{par::con_lattice(algebra), {}};
    const std::size_t k = table.congruences.size();
    table.cells.assign(k, std::vector<Partition>(k));
    const auto cells = static_cast<std::ptrdiff_t>(k * k);
    FirstError err;
#pragma omp parallel for schedule(dynamic)
    for (std::ptrdiff_t c = 0; c < cells; ++c) {
        const std::size_t i = static_cast<std::size_t>(c) / k;
        const std::size_t j = static_cast<std::size_t>(c) % k;
        err.run([&] {
            table.cells[i][j] = ckit::commutator(algebra, table.congruences[i], table.congruences[j]);
        });
    }
    err.rethrow();
    return table;
}

}  // namespace ckit::par
