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

#include <algorithm>
#include <random>

#include "ckit/congruence.hpp"
#include "doctest.h"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace ckit;
using ckit::testing::cyclic_group;

namespace {

PairSet random_pairs(std::size_t n, std::size_t count, std::mt19937& rng) {
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(n - 1));
    std::vector<PairSet::Pair> pairs;
    for (std::size_t i = 0; i < count; ++i) pairs.emplace_back(pick(rng), pick(rng));
    return PairSet(n, pairs);
}

std::vector<FiniteAlgebra> small_algebras() {
    std::vector<FiniteAlgebra> out = ckit::testing::all_binary_algebras_on_two();
    std::mt19937 rng(77);
    for (int i = 0; i < 120; ++i) out.push_back(ckit::testing::random_groupoid(3, rng));
    for (int i = 0; i < 30; ++i) out.push_back(ckit::testing::random_groupoid(4, rng));
    for (const auto& [name, a] : ckit::testing::named_algebras()) {
        if (a.size() <= 4) out.push_back(a);
    }
    // a unary and a ternary operation together
    std::uniform_int_distribution<Element> pick(0, 3);
    for (int i = 0; i < 10; ++i) {
        Operation u{"u", 1, std::vector<Element>(4)}, t{"t", 3, std::vector<Element>(64)};
        for (auto& e : u.table) e = pick(rng);
        for (auto& e : t.table) e = pick(rng);
        out.push_back(make_algebra(4, {u, t}));
    }
    return out;
}

}  // namespace

TEST_CASE("cg examples") {
    const auto z4 = cyclic_group(4);
    CHECK(cg(z4, PairSet(4)) == zero(4));
    CHECK(cg(z4, PairSet(4, {{0, 2}})) == parse_partition("0 2|1 3", 4));
    CHECK(ckit::testing::least_congruence_by_filter(z4, {{0, 2}}) == parse_partition("0 2|1 3", 4));

    // no operations: plain equivalence closure
    const auto set5 = ckit::testing::bare_set(5);
    CHECK(cg(set5, PairSet(5, {{0, 3}, {3, 4}})) == parse_partition("0 3 4", 5));

    CHECK_THROWS_AS(cg(z4, PairSet(3, {{0, 2}})), SizeMismatch);
}

TEST_CASE("principal congruences") {
    const auto z4 = cyclic_group(4);
    CHECK(principal(z4, 2, 2) == zero(4));
    CHECK(principal(z4, 0, 1) == one(4));
    CHECK(principal(z4, 1, 3) == parse_partition("0 2|1 3", 4));
    CHECK_THROWS_AS(principal(z4, 0, 4), DomainError);
}

TEST_CASE("con_lattice examples") {
    for (const auto& a : ckit::testing::all_binary_algebras_on_two()) {
        const auto con = con_lattice(a);
        REQUIRE(con.size() == 2);
        CHECK(con[0] == zero(2));
        CHECK(con[1] == one(2));
    }
    CHECK(con_lattice(ckit::testing::bare_set(3)).size() == 5);
    CHECK(con_lattice(cyclic_group(4)) ==
          std::vector<Partition>{zero(4), parse_partition("0 2|1 3", 4), one(4)});
    CHECK(ckit::testing::congruences_by_filter(cyclic_group(4)).size() == 3);
}

TEST_CASE("con_lattice equals the partition filter") {
    for (const auto& a : small_algebras()) {
        auto expected = ckit::testing::congruences_by_filter(a);
        auto got = con_lattice(a);
        CHECK(got.size() == expected.size());
        CHECK(std::is_sorted(got.begin(), got.end(), [](const Partition& p, const Partition& q) {
            return p.num_blocks() > q.num_blocks() ||
                   (p.num_blocks() == q.num_blocks() && p.reps() < q.reps());
        }));
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
    const auto s3 = ckit::testing::symmetric_group_s3();
    CHECK(con_lattice(s3).size() == 3);  // 1, A_3 cosets, S_3
}

TEST_CASE("con_lattice is meet- and join-closed") {
    for (const auto& a : small_algebras()) {
        const auto con = con_lattice(a);
        CHECK(std::find(con.begin(), con.end(), zero(a.size())) != con.end());
        CHECK(std::find(con.begin(), con.end(), one(a.size())) != con.end());
        for (const auto& p : con) {
            for (const auto& q : con) {
                CHECK(std::find(con.begin(), con.end(), join(p, q)) != con.end());
                CHECK(std::find(con.begin(), con.end(), meet(p, q)) != con.end());
            }
        }
    }
}

TEST_CASE("cg is the least congruence containing S") {
    std::mt19937 rng(4);
    for (const auto& a : small_algebras()) {
        const auto con = con_lattice(a);
        for (int trial = 0; trial < 4; ++trial) {
            const auto s = random_pairs(a.size(), 1 + trial, rng);
            const auto theta = cg(a, s);
            for (auto [u, v] : s) CHECK(theta.related(u, v));
            CHECK(is_congruence(a, theta));
            for (const auto& other : con) {
                bool contains = true;
                for (auto [u, v] : s) contains = contains && other.related(u, v);
                if (contains) CHECK(theta.leq(other));
            }
            // elementary translations reach the same closure as the filter
            CHECK(theta == ckit::testing::least_congruence_by_filter(a, s.pairs()));
        }
    }
}

TEST_CASE("cg is monotone and idempotent") {
    std::mt19937 rng(6);
    for (const auto& a : small_algebras()) {
        const auto s = random_pairs(a.size(), 2, rng);
        auto bigger = s.pairs();
        for (auto p : random_pairs(a.size(), 2, rng)) bigger.push_back(p);
        const auto theta = cg(a, s);
        CHECK(theta.leq(cg(a, PairSet(a.size(), bigger))));
        CHECK(cg(a, PairSet::from_partition(theta)) == theta);
    }
}

TEST_CASE("witness chains: examples") {
    const auto z4 = cyclic_group(4);
    const PairSet s(4, {{0, 2}});

    const auto trivial = witness_chain(z4, s, {3, 3});
    CHECK(trivial.links.empty());
    CHECK(replay(z4, trivial, s));

    const auto direct = witness_chain(z4, s, {0, 2});
    REQUIRE(direct.links.size() == 1);
    CHECK(direct.links[0].generator == std::pair<Element, Element>{0, 2});
    CHECK(direct.links[0].translations.empty());

    // (1,3) = (0+1, 2+1)
    const auto shifted = witness_chain(z4, s, {1, 3});
    REQUIRE(shifted.links.size() == 1);
    const auto& link = shifted.links[0];
    CHECK(link.generator == std::pair<Element, Element>{0, 2});
    REQUIRE(link.translations.size() == 1);
    const auto& step = link.translations[0];
    for (Element x = 0; x < 4; ++x) CHECK(step.apply(z4, x) == (x + 1) % 4);
    CHECK(replay(z4, shifted, s));

    const auto reversed = witness_chain(z4, s, {3, 1});
    CHECK(reversed.links.size() == 1);
    CHECK(reversed.links[0].generator == std::pair<Element, Element>{2, 0});
    CHECK(replay(z4, reversed, s));

    CHECK_THROWS_AS(witness_chain(z4, s, {0, 1}), NotInCongruence);
}

TEST_CASE("replay rejects broken chains") {
    const auto z4 = cyclic_group(4);
    const PairSet s(4, {{0, 2}});
    auto chain = witness_chain(z4, s, {1, 3});

    auto broken = chain;
    broken.endpoints = {0, 3};
    CHECK_FALSE(replay(z4, broken, s));

    // mismatched consecutive endpoints
    WitnessChain two{{0, 3}, {{0, 2, {0, 2}, {}}, {1, 3, {0, 2}, chain.links[0].translations}}};
    const auto r = replay(z4, two, s);
    CHECK_FALSE(r);
    CHECK(r.diagnostic.find("link 1") != std::string::npos);

    // generator outside S and its converse
    broken = chain;
    broken.links[0].generator = {1, 3};
    broken.links[0].translations.clear();
    CHECK(replay(z4, broken, PairSet(4, {{1, 3}})));
    CHECK_FALSE(replay(z4, broken, s));

    broken = chain;
    broken.links[0].translations[0].fixed_args = {2};
    CHECK_FALSE(replay(z4, broken, s));

    broken = chain;
    broken.links[0].translations[0].op_index = 3;
    CHECK_FALSE(replay(z4, broken, s));

    CHECK_FALSE(replay(z4, WitnessChain{{0, 1}, {}}, s));
}

TEST_CASE("every generated pair has a replayable chain") {
    std::mt19937 rng(8);
    for (const auto& a : small_algebras()) {
        const auto s = random_pairs(a.size(), 2, rng);
        const auto theta = cg(a, s);
        for (Element x = 0; x < a.size(); ++x) {
            for (Element y = 0; y < a.size(); ++y) {
                if (!theta.related(x, y)) {
                    CHECK_THROWS_AS(witness_chain(a, s, {x, y}), NotInCongruence);
                    continue;
                }
                const auto chain = witness_chain(a, s, {x, y});
                const auto r = replay(a, chain, s);
                CHECK_MESSAGE(r.ok, r.diagnostic);
            }
        }
    }
}

TEST_CASE("witness JSON") {
    const auto z4 = cyclic_group(4);
    const PairSet s(4, {{0, 2}});
    const auto chain = witness_chain(z4, s, {1, 3});
    const auto text = witness_to_json(chain);
    CHECK(text.rfind(R"({"endpoints":[1,3],"links":[{"from":1,"to":3,"generator":[0,2],"translations":[{"op":0,"pos":)", 0) == 0);
    CHECK(witness_from_json(text) == chain);
    CHECK_THROWS_AS(witness_from_json("{\"links\": []}"), ParseError);
}
