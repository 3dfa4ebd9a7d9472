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

#include "ckit/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "json.hpp"
#include "table_walk.hpp"

namespace ckit {

namespace {

constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

// A merge performed by the closure. A seed edge carries its generator; a
// derived edge points at the worklist edge it was translated from, plus the
// elementary translation (op, pos, other-assignment j) used.
struct MergeRecord {
    Element x, y;
    std::size_t parent;
    std::size_t op, pos, j;
    std::pair<Element, Element> generator;
};

class Closure {
public:
    Closure(const FiniteAlgebra& algebra, bool record)
        : algebra_(algebra), record_(record), parent_(algebra.size()), size_(algebra.size(), 1) {
        std::iota(parent_.begin(), parent_.end(), Element{0});
    }

    void seed(const PairSet& generators) {
        if (generators.universe_size() != algebra_.size()) {
            throw SizeMismatch("generating set over " + std::to_string(generators.universe_size()) +
                               " elements, algebra has " + std::to_string(algebra_.size()));
        }
        for (auto [u, v] : generators) {
            if (u >= algebra_.size() || v >= algebra_.size()) {
                throw DomainError("generator (" + std::to_string(u) + "," + std::to_string(v) +
                                  ") out of range");
            }
            merge(u, v, {kNoParent, 0, 0, 0, {u, v}});
        }
    }

    void run() {
        const std::size_t n = algebra_.size();
        while (head_ < work_.size()) {
            const auto [a, b, edge] = work_[head_++];
            for (std::size_t op = 0; op < algebra_.num_ops(); ++op) {
                const Operation& f = algebra_.ops()[op];
                for (std::size_t pos = 0; pos < f.arity; ++pos) {
                    const detail::PositionSlice slice(n, f.arity, pos);
                    for (std::size_t j = 0; j < slice.count; ++j) {
                        merge(f.table[slice.at(j, a)], f.table[slice.at(j, b)],
                              {edge, op, pos, j, {}});
                    }
                }
            }
        }
    }

    Element find(Element x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }

    Partition partition() {
        std::vector<Element> labels(parent_.size());
        for (Element x = 0; x < labels.size(); ++x) labels[x] = find(x);
        return Partition::from_labels(labels);
    }

    const std::vector<MergeRecord>& records() const noexcept { return records_; }

private:
    struct Provenance {
        std::size_t parent, op, pos, j;
        std::pair<Element, Element> generator;
    };

    void merge(Element x, Element y, const Provenance& why) {
        Element rx = find(x), ry = find(y);
        if (rx == ry) return;
        if (size_[rx] < size_[ry]) std::swap(rx, ry);
        parent_[ry] = rx;
        size_[rx] += size_[ry];
        std::size_t id = kNoParent;
        if (record_) {
            id = records_.size();
            records_.push_back({x, y, why.parent, why.op, why.pos, why.j, why.generator});
        }
        work_.push_back({x, y, id});
    }

    struct Item {
        Element a, b;
        std::size_t edge;
    };

    const FiniteAlgebra& algebra_;
    bool record_;
    std::vector<Element> parent_;
    std::vector<std::size_t> size_;
    std::vector<Item> work_;  // FIFO via head_
    std::size_t head_ = 0;
    std::vector<MergeRecord> records_;
};

TranslationStep decode_step(const FiniteAlgebra& algebra, const MergeRecord& r) {
    const std::size_t n = algebra.size();
    const std::size_t k = algebra.ops()[r.op].arity;
    TranslationStep step{r.op, r.pos, std::vector<Element>(k - 1)};
    std::size_t j = r.j;
    for (std::size_t i = k - 1; i-- > 0;) {
        step.fixed_args[i] = static_cast<Element>(j % n);
        j /= n;
    }
    return step;
}

WitnessLink make_link(const FiniteAlgebra& algebra, const std::vector<MergeRecord>& records,
                      std::size_t edge, bool forward) {
    const MergeRecord& e = records[edge];
    WitnessLink link;
    std::size_t cur = edge;
    while (records[cur].parent != kNoParent) {
        link.translations.push_back(decode_step(algebra, records[cur]));
        cur = records[cur].parent;
    }
    std::reverse(link.translations.begin(), link.translations.end());
    const auto gen = records[cur].generator;
    if (forward) {
        link.from = e.x;
        link.to = e.y;
        link.generator = gen;
    } else {
        link.from = e.y;
        link.to = e.x;
        link.generator = {gen.second, gen.first};
    }
    return link;
}

}  // namespace

Partition cg(const FiniteAlgebra& algebra, const PairSet& generators) {
    Closure c(algebra, false);
    c.seed(generators);
    c.run();
    return c.partition();
}

Partition principal(const FiniteAlgebra& algebra, Element a, Element b) {
    return cg(algebra, PairSet(algebra.size(), {{a, b}}));
}

std::vector<Partition> con_lattice(const FiniteAlgebra& algebra) {
    const std::size_t n = algebra.size();
    std::set<Partition> all{zero(n)};
    for (Element a = 0; a < n; ++a) {
        for (Element b = a + 1; b < n; ++b) all.insert(principal(algebra, a, b));
    }
    std::vector<Partition> frontier(all.begin(), all.end());
    while (!frontier.empty()) {
        std::vector<Partition> fresh;
        const std::vector<Partition> snapshot(all.begin(), all.end());
        for (const auto& p : frontier) {
            for (const auto& q : snapshot) {
                Partition j = join(p, q);
                if (all.insert(j).second) fresh.push_back(std::move(j));
            }
        }
        frontier = std::move(fresh);
    }
    std::vector<Partition> out(all.begin(), all.end());
    std::stable_sort(out.begin(), out.end(), [](const Partition& p, const Partition& q) {
        return p.num_blocks() > q.num_blocks();
    });
    return out;
}

Element TranslationStep::apply(const FiniteAlgebra& algebra, Element x) const {
    std::vector<Element> args(fixed_args.begin(), fixed_args.end());
    args.insert(args.begin() + static_cast<std::ptrdiff_t>(position), x);
    return algebra.eval(op_index, args);
}

WitnessChain witness_chain(const FiniteAlgebra& algebra, const PairSet& generators,
                           std::pair<Element, Element> target) {
    const auto [x, y] = target;
    if (x >= algebra.size() || y >= algebra.size()) {
        throw DomainError("target pair out of range");
    }
    Closure c(algebra, true);
    c.seed(generators);
    c.run();
    if (c.find(x) != c.find(y)) {
        throw NotInCongruence("(" + std::to_string(x) + "," + std::to_string(y) +
                              ") is not in the generated congruence");
    }
    WitnessChain chain{target, {}};
    if (x == y) return chain;

    // Merge edges form a spanning forest; the path between x and y is unique.
    const auto& records = c.records();
    std::vector<std::vector<std::size_t>> incident(algebra.size());
    for (std::size_t e = 0; e < records.size(); ++e) {
        incident[records[e].x].push_back(e);
        incident[records[e].y].push_back(e);
    }
    constexpr std::size_t unseen = static_cast<std::size_t>(-1);
    std::vector<std::size_t> via(algebra.size(), unseen);
    std::vector<bool> visited(algebra.size(), false);
    std::queue<Element> q;
    q.push(x);
    visited[x] = true;
    while (!q.empty() && !visited[y]) {
        const Element cur = q.front();
        q.pop();
        for (std::size_t e : incident[cur]) {
            const Element next = records[e].x == cur ? records[e].y : records[e].x;
            if (!visited[next]) {
                visited[next] = true;
                via[next] = e;
                q.push(next);
            }
        }
    }
    for (Element cur = y; cur != x;) {
        const std::size_t e = via[cur];
        const bool forward = records[e].y == cur;
        chain.links.push_back(make_link(algebra, records, e, forward));
        cur = forward ? records[e].x : records[e].y;
    }
    std::reverse(chain.links.begin(), chain.links.end());
    return chain;
}

ReplayResult replay(const FiniteAlgebra& algebra, const WitnessChain& chain,
                    const PairSet& generators) {
    auto fail = [](std::string why) { return ReplayResult{false, std::move(why)}; };
    const auto [x, y] = chain.endpoints;
    if (chain.links.empty()) {
        return x == y ? ReplayResult{} : fail("empty chain between distinct endpoints");
    }
    if (chain.links.front().from != x) return fail("link 0 does not start at the first endpoint");
    if (chain.links.back().to != y) return fail("last link does not end at the second endpoint");

    for (std::size_t i = 0; i < chain.links.size(); ++i) {
        const WitnessLink& link = chain.links[i];
        const std::string tag = "link " + std::to_string(i) + ": ";
        if (i > 0 && chain.links[i - 1].to != link.from) {
            return fail(tag + "does not continue from the previous link");
        }
        const auto [u, v] = link.generator;
        if (!generators.contains(u, v) && !generators.contains(v, u)) {
            return fail(tag + "generator is not in S or its converse");
        }
        Element pu = u, pv = v;
        for (const auto& step : link.translations) {
            if (step.op_index >= algebra.num_ops()) return fail(tag + "bad operation index");
            const std::size_t k = algebra.ops()[step.op_index].arity;
            if (step.position >= k || step.fixed_args.size() + 1 != k) {
                return fail(tag + "translation does not match operation arity");
            }
            for (Element c : step.fixed_args) {
                if (c >= algebra.size()) return fail(tag + "translation constant out of range");
            }
            pu = step.apply(algebra, pu);
            pv = step.apply(algebra, pv);
        }
        if (pu != link.from || pv != link.to) {
            return fail(tag + "translated generator gives (" + std::to_string(pu) + "," +
                        std::to_string(pv) + "), expected (" + std::to_string(link.from) + "," +
                        std::to_string(link.to) + ")");
        }
    }
    return {};
}

std::string witness_to_json(const WitnessChain& chain) {
    nlohmann::ordered_json doc;
    doc["endpoints"] = {chain.endpoints.first, chain.endpoints.second};
    doc["links"] = nlohmann::ordered_json::array();
    for (const auto& link : chain.links) {
        nlohmann::ordered_json l;
        l["from"] = link.from;
        l["to"] = link.to;
        l["generator"] = {link.generator.first, link.generator.second};
        l["translations"] = nlohmann::ordered_json::array();
        for (const auto& s : link.translations) {
            nlohmann::ordered_json t;
            t["op"] = s.op_index;
            t["pos"] = s.position;
            t["args"] = s.fixed_args;
            l["translations"].push_back(std::move(t));
        }
        doc["links"].push_back(std::move(l));
    }
    return doc.dump();
}

WitnessChain witness_from_json(std::string_view text) {
    try {
        const auto doc = nlohmann::json::parse(text.begin(), text.end());
        WitnessChain chain;
        const auto& ends = doc.at("endpoints");
        chain.endpoints = {ends.at(0).get<Element>(), ends.at(1).get<Element>()};
        for (const auto& l : doc.at("links")) {
            WitnessLink link;
            link.from = l.at("from").get<Element>();
            link.to = l.at("to").get<Element>();
            link.generator = {l.at("generator").at(0).get<Element>(),
                              l.at("generator").at(1).get<Element>()};
            for (const auto& t : l.at("translations")) {
                link.translations.push_back({t.at("op").get<std::size_t>(),
                                             t.at("pos").get<std::size_t>(),
                                             t.at("args").get<std::vector<Element>>()});
            }
            chain.links.push_back(std::move(link));
        }
        return chain;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("witness chain: ") + e.what());
    }
}

}  // namespace ckit
