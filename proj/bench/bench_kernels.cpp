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

// Serial reference vs OpenMP kernels on random groupoids.
//
//   ckit_bench [n ...]        default sizes 8 12 16 24

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <random>
#include <vector>

#include "ckit/algebra.hpp"
#include "ckit/commutator.hpp"
#include "ckit/congruence.hpp"
#include "ckit/parallel.hpp"

namespace {

ckit::FiniteAlgebra random_groupoid(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    std::uniform_int_distribution<ckit::Element> pick(0, static_cast<ckit::Element>(n - 1));
    ckit::Operation f{"*", 2, std::vector<ckit::Element>(n * n)};
    for (auto& e : f.table) e = pick(rng);
    return ckit::make_algebra(n, {f});
}

// Groupoid with a nontrivial quotient: x*y depends only on x mod 2 on the
// coarse level, so the lattice has more than two elements.
ckit::FiniteAlgebra layered_groupoid(std::size_t n, unsigned seed) {
    std::mt19937 rng(seed);
    ckit::Operation f{"*", 2, std::vector<ckit::Element>(n * n)};
    const std::size_t half = n / 2;
    std::uniform_int_distribution<std::size_t> pick(0, half - 1);
    for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
            const std::size_t parity = (x + y) % 2;
            f.table[x * n + y] = static_cast<ckit::Element>(2 * pick(rng) + parity);
        }
    }
    return ckit::make_algebra(n, {f});
}

template <typename Fn>
double seconds(Fn&& fn) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void report(const char* kernel, std::size_t n, double serial, double parallel, bool same) {
    std::cout << std::left << std::setw(20) << kernel << std::right << std::setw(4) << n
              << std::setw(12) << std::fixed << std::setprecision(4) << serial << std::setw(12)
              << parallel << std::setw(9) << std::setprecision(2) << serial / parallel << "x"
              << (same ? "" : "  MISMATCH") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::size_t> sizes;
    for (int i = 1; i < argc; ++i) sizes.push_back(static_cast<std::size_t>(std::atoi(argv[i])));
    if (sizes.empty()) sizes = {8, 12, 16, 24};

    std::cout << "threads: " << ckit::par::max_threads() << "\n";
    std::cout << std::left << std::setw(20) << "kernel" << std::right << std::setw(4) << "n"
              << std::setw(12) << "serial[s]" << std::setw(12) << "omp[s]" << std::setw(10)
              << "speedup" << "\n";
    bool all_same = true;
    for (std::size_t n : sizes) {
        const auto a = random_groupoid(n, 17u + static_cast<unsigned>(n));
        const auto full = ckit::one(n);
        ckit::PairAlgebra ps, pp;
        const double t_ps = seconds([&] { ps = ckit::make_pair_algebra(a, full); });
        const double t_pp = seconds([&] { pp = ckit::par::make_pair_algebra(a, full); });
        const bool same_pair = ps.algebra() == pp.algebra();
        report("make_pair_algebra", n, t_ps, t_pp, same_pair);

        const auto layered = layered_groupoid(n, 5u + static_cast<unsigned>(n));
        std::vector<ckit::Partition> ls, lp;
        const double t_ls = seconds([&] { ls = ckit::con_lattice(layered); });
        const double t_lp = seconds([&] { lp = ckit::par::con_lattice(layered); });
        report("con_lattice", n, t_ls, t_lp, ls == lp);

        ckit::CommutatorTable ts, tp;
        const double t_ts = seconds([&] { ts = ckit::commutator_table(layered); });
        const double t_tp = seconds([&] { tp = ckit::par::commutator_table(layered); });
        report("commutator_table", n, t_ts, t_tp, ts == tp);
        all_same = all_same && same_pair && ls == lp && ts == tp;
    }
    return all_same ? 0 : 1;
}
