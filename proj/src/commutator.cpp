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

#include "ckit/commutator.hpp"

#include <set>

#include "ckit/debug.hpp"
#include "json.hpp"

namespace ckit {

namespace {

void require_congruence(const FiniteAlgebra& algebra, const Partition& p, const char* name) {
    if (p.size() != algebra.size()) {
        throw SizeMismatch(std::string(name) + " is a partition on " + std::to_string(p.size()) +
                           " elements, algebra has " + std::to_string(algebra.size()));
    }
    if (!is_congruence(algebra, p)) {
        throw NotACongruence(std::string(name) + " = " + format_partition(p) +
                             " is not a congruence");
    }
}

// Per Delta-class flag: does the class contain a diagonal pair (a,a)?
std::vector<bool> diagonal_classes(const DeltaContext& ctx) {
    std::vector<bool> hit(ctx.pair_algebra.size(), false);
    for (Element a = 0; a < ctx.base_size(); ++a) {
        hit[ctx.delta.rep(ctx.pair_algebra.index_of(a, a))] = true;
    }
    return hit;
}

}  // namespace

PairSet d_alpha(const PairAlgebra& pair_algebra, const Partition& alpha) {
    std::vector<PairSet::Pair> gens;
    for (Element a = 0; a < alpha.size(); ++a) {
        for (Element b = 0; b < alpha.size(); ++b) {
            if (alpha.related(a, b)) {
                gens.emplace_back(pair_algebra.index_of(a, a), pair_algebra.index_of(b, b));
            }
        }
    }
    return PairSet(pair_algebra.size(), std::move(gens));
}

PairSet d_alpha(const FiniteAlgebra& algebra, const Partition& alpha, const Partition& beta) {
    require_congruence(algebra, alpha, "alpha");
    return d_alpha(make_pair_algebra(algebra, beta), alpha);
}

DeltaContext delta(const FiniteAlgebra& algebra, const Partition& alpha, const Partition& beta) {
    require_congruence(algebra, alpha, "alpha");
    require_congruence(algebra, beta, "beta");
    DeltaContext ctx{make_pair_algebra(algebra, beta), alpha, beta, {}, {}};
    ctx.generators = d_alpha(ctx.pair_algebra, alpha);
    ctx.delta = cg(ctx.pair_algebra.algebra(), ctx.generators);
    return ctx;
}

Tolerance psi(const DeltaContext& ctx, const Tolerance& t) {
    if (t.size() != ctx.base_size()) {
        throw SizeMismatch("tolerance on " + std::to_string(t.size()) + " elements, algebra has " +
                           std::to_string(ctx.base_size()));
    }
    const auto& universe = ctx.pair_algebra.universe();
    std::vector<bool> touched(universe.size(), false);
    for (std::size_t i = 0; i < universe.size(); ++i) {
        if (t.contains(universe[i].first, universe[i].second)) touched[ctx.delta.rep(i)] = true;
    }
    Tolerance out = t;
    for (std::size_t i = 0; i < universe.size(); ++i) {
        if (touched[ctx.delta.rep(i)]) out.add(universe[i].first, universe[i].second);
    }
    return out;
}

Partition commutator(const DeltaContext& ctx) {
    const std::size_t n = ctx.base_size();
    const auto hit = diagonal_classes(ctx);
    std::vector<unsigned char> rel(n * n, 0);
    const auto& universe = ctx.pair_algebra.universe();
    for (std::size_t i = 0; i < universe.size(); ++i) {
        if (hit[ctx.delta.rep(i)]) rel[universe[i].first * n + universe[i].second] = 1;
    }

    // Label each x by the least y related to it; the relation is an
    // equivalence iff it coincides with "same label".
    std::vector<Element> labels(n);
    for (std::size_t x = 0; x < n; ++x) {
        std::size_t y = 0;
        while (y < n && !rel[x * n + y]) ++y;
        if (y == n) throw InternalInvariantViolation("commutator relation is not reflexive");
        labels[x] = static_cast<Element>(y);
    }
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t z = 0; z < n; ++z) {
            if ((rel[x * n + z] != 0) != (labels[x] == labels[z])) {
                throw InternalInvariantViolation("commutator relation is not an equivalence at (" +
                                                 std::to_string(x) + "," + std::to_string(z) + ")");
            }
        }
    }
    Partition result = Partition::from_labels(labels);
    if (debug_asserts_enabled() && !is_congruence(ctx.pair_algebra.base(), result)) {
        throw InternalInvariantViolation("commutator " + format_partition(result) +
                                         " is not compatible with the operations");
    }
    return result;
}

Partition commutator(const FiniteAlgebra& algebra, const Partition& alpha, const Partition& beta) {
    return commutator(delta(algebra, alpha, beta));
}

namespace {

template <typename Filter>
Tolerance lfp_meet_over(const FiniteAlgebra& algebra, const Partition& alpha,
                        const Partition& beta, Filter keep) {
    const std::size_t n = algebra.size();
    if (n > kMaxToleranceEnumeration) {
        throw DomainError("meet oracle needs |A| <= " + std::to_string(kMaxToleranceEnumeration) +
                          ", got " + std::to_string(n));
    }
    const DeltaContext ctx = delta(algebra, alpha, beta);
    Tolerance tau = Tolerance::full(n);
    for (const auto& t : all_tolerances(n)) {
        if (keep(t) && psi(ctx, t).leq(t)) tau = meet_tol(tau, t);
    }
    return tau;
}

}  // namespace

Tolerance lfp_by_meet(const FiniteAlgebra& algebra, const Partition& alpha, const Partition& beta) {
    return lfp_meet_over(algebra, alpha, beta, [](const Tolerance&) { return true; });
}

Tolerance lfp_by_meet_compatible(const FiniteAlgebra& algebra, const Partition& alpha,
                                 const Partition& beta) {
    return lfp_meet_over(algebra, alpha, beta,
                         [&](const Tolerance& t) { return is_compatible(algebra, t); });
}

bool term_condition(const DeltaContext& ctx, const Partition& gamma) {
    require_congruence(ctx.pair_algebra.base(), gamma, "gamma");
    const auto& universe = ctx.pair_algebra.universe();
    // -1 unknown, else the gamma-membership every member of the class must share
    std::vector<signed char> state(universe.size(), -1);
    for (std::size_t i = 0; i < universe.size(); ++i) {
        const signed char in = gamma.related(universe[i].first, universe[i].second) ? 1 : 0;
        signed char& s = state[ctx.delta.rep(i)];
        if (s == -1) {
            s = in;
        } else if (s != in) {
            return false;
        }
    }
    return true;
}

bool term_condition(const FiniteAlgebra& algebra, const Partition& alpha, const Partition& beta,
                    const Partition& gamma) {
    require_congruence(algebra, gamma, "gamma");
    return term_condition(delta(algebra, alpha, beta), gamma);
}

std::vector<std::vector<Element>> polynomial_functions(const FiniteAlgebra& algebra,
                                                       std::size_t arity) {
    const std::size_t n = algebra.size();
    const std::size_t points = checked_power(n, arity);
    if (points == 0 || points > (std::size_t{1} << 16)) {
        throw DomainError("polynomial function tables of arity " + std::to_string(arity) +
                          " are too large");
    }
    std::vector<std::vector<Element>> funcs;
    std::set<std::vector<Element>> seen;
    auto add = [&](std::vector<Element> table) {
        if (seen.insert(table).second) {
            if (seen.size() > kMaxPolynomialClone) {
                throw DomainError("polynomial clone exceeds " + std::to_string(kMaxPolynomialClone) +
                                  " functions");
            }
            funcs.push_back(std::move(table));
        }
    };

    // Projections, then constants.
    for (std::size_t i = 0; i < arity; ++i) {
        const std::size_t stride = checked_power(n, arity - 1 - i);
        std::vector<Element> t(points);
        for (std::size_t e = 0; e < points; ++e) t[e] = static_cast<Element>(e / stride % n);
        add(std::move(t));
    }
    for (Element c = 0; c < n; ++c) add(std::vector<Element>(points, c));

    // Semi-naive closure: each round only tries tuples touching a function
    // added in the previous round.
    std::size_t done = 0;
    std::vector<std::size_t> pick;
    while (done < funcs.size()) {
        const std::size_t current = funcs.size();
        for (const auto& f : algebra.ops()) {
            const std::size_t r = f.arity;
            if (r == 0) continue;
            const std::size_t tuples = checked_power(current, r);
            if (tuples == 0 || tuples > (std::size_t{1} << 26)) {
                throw DomainError("polynomial closure is too large to enumerate");
            }
            pick.assign(r, 0);
            for (std::size_t step = 0; step < tuples; ++step) {
                bool fresh = false;
                for (std::size_t p : pick) fresh = fresh || p >= done;
                if (fresh) {
                    std::vector<Element> t(points);
                    for (std::size_t e = 0; e < points; ++e) {
                        std::size_t idx = 0;
                        for (std::size_t p : pick) idx = idx * n + funcs[p][e];
                        t[e] = f.table[idx];
                    }
                    add(std::move(t));
                }
                for (std::size_t pos = r; pos-- > 0;) {
                    if (++pick[pos] < current) break;
                    pick[pos] = 0;
                }
            }
        }
        done = current;
    }
    return funcs;
}

std::optional<TermConditionFailure> find_term_condition_failure(const FiniteAlgebra& algebra,
                                                                const Partition& alpha,
                                                                const Partition& beta,
                                                                const Partition& gamma,
                                                                std::size_t max_env_arity) {
    require_congruence(algebra, alpha, "alpha");
    require_congruence(algebra, beta, "beta");
    require_congruence(algebra, gamma, "gamma");
    const std::size_t n = algebra.size();
    const std::size_t m = max_env_arity;
    if (m > 2) throw DomainError("max_env_arity must be at most 2");
    if (m == 2 && n > 3) throw DomainError("max_env_arity = 2 needs |A| <= 3");

    const auto polys = polynomial_functions(algebra, 1 + m);
    std::vector<std::pair<Element, Element>> alpha_pairs, beta_pairs;
    for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) {
            if (a != b && alpha.related(a, b)) alpha_pairs.emplace_back(a, b);
            if (beta.related(a, b)) beta_pairs.emplace_back(a, b);
        }
    }
    const std::size_t env_count = checked_power(beta_pairs.size(), m);
    const std::size_t row = checked_power(n, m);
    std::vector<std::size_t> pick(m);
    for (const auto& t : polys) {
        for (auto [a, b] : alpha_pairs) {
            std::fill(pick.begin(), pick.end(), 0);
            for (std::size_t step = 0; step < env_count; ++step) {
                std::size_t u_idx = 0, v_idx = 0;
                for (std::size_t p : pick) {
                    u_idx = u_idx * n + beta_pairs[p].first;
                    v_idx = v_idx * n + beta_pairs[p].second;
                }
                const bool top = gamma.related(t[a * row + u_idx], t[a * row + v_idx]);
                const bool bottom = gamma.related(t[b * row + u_idx], t[b * row + v_idx]);
                if (top != bottom) {
                    TermConditionFailure w{t, a, b, {}, {}};
                    for (std::size_t p : pick) {
                        w.u.push_back(beta_pairs[p].first);
                        w.v.push_back(beta_pairs[p].second);
                    }
                    return w;
                }
                for (std::size_t pos = m; pos-- > 0;) {
                    if (++pick[pos] < beta_pairs.size()) break;
                    pick[pos] = 0;
                }
            }
        }
    }
    return std::nullopt;
}

bool term_condition_bounded(const FiniteAlgebra& algebra, const Partition& alpha,
                            const Partition& beta, const Partition& gamma,
                            std::size_t max_env_arity) {
    return !find_term_condition_failure(algebra, alpha, beta, gamma, max_env_arity).has_value();
}

bool is_abelian(const FiniteAlgebra& algebra) {
    const std::size_t n = algebra.size();
    return commutator(algebra, one(n), one(n)) == zero(n);
}

CommutatorTable commutator_table(const FiniteAlgebra& algebra) {
    CommutatorTable table{con_lattice(algebra), {}};
    const std::size_t k = table.congruences.size();
    table.cells.assign(k, std::vector<Partition>(k));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
            table.cells[i][j] = commutator(algebra, table.congruences[i], table.congruences[j]);
        }
    }
    return table;
}

WitnessChain commutator_witness(const DeltaContext& ctx, Element x, Element y) {
    const PairAlgebra& b = ctx.pair_algebra;
    const std::size_t n = ctx.base_size();
    if (x >= n || y >= n) throw DomainError("witness endpoint out of range");
    if (!b.contains(x, y)) {
        throw NotInCongruence("(" + std::to_string(x) + "," + std::to_string(y) +
                              ") is not in beta, hence not in the commutator");
    }
    const Element target = b.index_of(x, y);
    for (Element a = 0; a < n; ++a) {
        const Element diag = b.index_of(a, a);
        if (ctx.delta.related(diag, target)) {
            return witness_chain(b.algebra(), ctx.generators, {diag, target});
        }
    }
    throw NotInCongruence("(" + std::to_string(x) + "," + std::to_string(y) +
                          ") is not in the commutator");
}

std::string partition_to_json(const Partition& p) {
    nlohmann::ordered_json doc;
    doc["blocks"] = p.blocks();
    return doc.dump();
}

std::string delta_to_json(const DeltaContext& ctx) {
    nlohmann::ordered_json doc;
    doc["universe"] = nlohmann::ordered_json::array();
    for (const auto& [a, b] : ctx.pair_algebra.universe()) doc["universe"].push_back({a, b});
    doc["delta"]["blocks"] = ctx.delta.blocks();
    return doc.dump();
}

}  // namespace ckit
