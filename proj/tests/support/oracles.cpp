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

#include "support/oracles.hpp"

#include <functional>
#include <stdexcept>

namespace ckit::testing {

std::vector<Partition> all_partitions(std::size_t n) {
    std::vector<Partition> out;
    std::vector<int> rgs(n, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t i, int max_label) {
        if (i == n) {
            out.push_back(Partition::from_labels(rgs));
            return;
        }
        for (int l = 0; l <= max_label + 1; ++l) {
            rgs[i] = l;
            rec(i + 1, std::max(max_label, l));
        }
    };
    if (n > 0) {
        rgs[0] = 0;
        rec(1, 0);
    }
    return out;
}

bool is_congruence_direct(const FiniteAlgebra& algebra, const Partition& p) {
    const std::size_t n = algebra.size();
    for (const auto& f : algebra.ops()) {
        const std::size_t k = f.arity;
        const std::size_t tuples = checked_power(n, k);
        for (std::size_t x = 0; x < tuples; ++x) {
            for (std::size_t y = 0; y < tuples; ++y) {
                bool related = true;
                std::size_t xr = x, yr = y;
                for (std::size_t i = 0; i < k; ++i) {
                    related = related && p.related(static_cast<Element>(xr % n), static_cast<Element>(yr % n));
                    xr /= n;
                    yr /= n;
                }
                if (related && !p.related(f.table[x], f.table[y])) return false;
            }
        }
    }
    return true;
}

Partition least_congruence_by_filter(const FiniteAlgebra& algebra,
                                     const std::vector<std::pair<Element, Element>>& pairs) {
    const std::size_t n = algebra.size();
    Relation least(n, std::vector<bool>(n, true));
    for (const auto& p : all_partitions(n)) {
        bool contains = true;
        for (auto [a, b] : pairs) contains = contains && p.related(a, b);
        if (!contains || !is_congruence_direct(algebra, p)) continue;
        for (Element x = 0; x < n; ++x) {
            for (Element y = 0; y < n; ++y) least[x][y] = least[x][y] && p.related(x, y);
        }
    }
    std::vector<Element> labels(n);
    for (Element x = 0; x < n; ++x) {
        Element y = 0;
        while (!least[x][y]) ++y;
        labels[x] = y;
    }
    return Partition::from_labels(labels);
}

std::vector<Partition> congruences_by_filter(const FiniteAlgebra& algebra) {
    std::vector<Partition> out;
    for (auto& p : all_partitions(algebra.size())) {
        if (is_congruence_direct(algebra, p)) out.push_back(std::move(p));
    }
    return out;
}

Element DirectPairAlgebra::index(Element a, Element b) const {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (pairs[i] == std::pair{a, b}) return static_cast<Element>(i);
    }
    throw std::out_of_range("pair not in universe");
}

DirectPairAlgebra direct_pair_algebra(const FiniteAlgebra& algebra, const Partition& beta) {
    const std::size_t n = algebra.size();
    DirectPairAlgebra out;
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            if (beta.related(a, b)) out.pairs.emplace_back(a, b);
        }
    }
    const std::size_t m = out.pairs.size();
    std::vector<Operation> ops;
    for (const auto& f : algebra.ops()) {
        Operation g{f.name, f.arity, {}};
        const std::size_t tuples = checked_power(m, f.arity);
        for (std::size_t t = 0; t < tuples; ++t) {
            std::vector<Element> left(f.arity), right(f.arity);
            std::size_t rest = t;
            for (std::size_t i = f.arity; i-- > 0;) {
                left[i] = out.pairs[rest % m].first;
                right[i] = out.pairs[rest % m].second;
                rest /= m;
            }
            g.table.push_back(out.index(algebra.eval(&f - algebra.ops().data(), left),
                                        algebra.eval(&f - algebra.ops().data(), right)));
        }
        ops.push_back(std::move(g));
    }
    out.algebra = FiniteAlgebra(m, std::move(ops));
    return out;
}

Partition delta_by_filter(const FiniteAlgebra& algebra, const Partition& alpha,
                          const Partition& beta) {
    const auto b = direct_pair_algebra(algebra, beta);
    if (b.pairs.size() > 9) throw std::invalid_argument("pair algebra too large for the filter");
    std::vector<std::pair<Element, Element>> gens;
    for (Element a = 0; a < algebra.size(); ++a) {
        for (Element c = 0; c < algebra.size(); ++c) {
            if (alpha.related(a, c)) gens.emplace_back(b.index(a, a), b.index(c, c));
        }
    }
    return least_congruence_by_filter(b.algebra, gens);
}

Relation commutator_by_filter(const FiniteAlgebra& algebra, const Partition& alpha,
                              const Partition& beta) {
    const std::size_t n = algebra.size();
    const auto b = direct_pair_algebra(algebra, beta);
    const Partition d = delta_by_filter(algebra, alpha, beta);
    Relation out(n, std::vector<bool>(n, false));
    for (Element a = 0; a < n; ++a) {
        for (std::size_t i = 0; i < b.pairs.size(); ++i) {
            if (d.related(b.index(a, a), static_cast<Element>(i))) {
                out[b.pairs[i].first][b.pairs[i].second] = true;
            }
        }
    }
    return out;
}

Partition derived_subgroup_cosets(const FiniteAlgebra& group) {
    const std::size_t n = group.size();
    auto mul = [&](Element a, Element b) { return group.eval(0, {a, b}); };
    Element e = 0;
    while (!(mul(e, 0) == 0 && mul(0, e) == 0 && mul(e, e) == e)) ++e;
    auto inv = [&](Element a) {
        Element b = 0;
        while (mul(a, b) != e) ++b;
        return b;
    };
    std::vector<bool> in(n, false);
    in[e] = true;
    for (Element g = 0; g < n; ++g) {
        for (Element h = 0; h < n; ++h) in[mul(mul(inv(g), inv(h)), mul(g, h))] = true;
    }
    for (bool grew = true; grew;) {
        grew = false;
        for (Element a = 0; a < n; ++a) {
            for (Element b = 0; b < n; ++b) {
                if (in[a] && in[b] && !in[mul(a, b)]) in[mul(a, b)] = grew = true;
            }
        }
    }
    // x ~ y iff x^-1 y in the subgroup
    std::vector<Element> labels(n);
    for (Element x = 0; x < n; ++x) {
        Element y = 0;
        while (!in[mul(inv(x), y)]) ++y;
        labels[x] = y;
    }
    return Partition::from_labels(labels);
}

Relation as_relation(const Partition& p) {
    Relation r(p.size(), std::vector<bool>(p.size(), false));
    for (Element x = 0; x < p.size(); ++x) {
        for (Element y = 0; y < p.size(); ++y) r[x][y] = p.related(x, y);
    }
    return r;
}

}  // namespace ckit::testing
