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

#include "ckit/algebra.hpp"

namespace ckit::detail {

/// Layout helpers for a table of arity k over n elements with one argument
/// position singled out. The "other" assignments are numbered 0..n^(k-1)-1
/// in the same row-major order as the table itself.
struct PositionSlice {
    std::size_t n;
    std::size_t stride;  // n^(k-1-pos)
    std::size_t count;   // n^(k-1)

    PositionSlice(std::size_t n_, std::size_t arity, std::size_t pos)
        : n(n_), stride(checked_power(n_, arity - 1 - pos)), count(checked_power(n_, arity - 1)) {}

    /// Flat table index of other-assignment j with the singled-out argument 0.
    std::size_t base(std::size_t j) const noexcept { return (j / stride) * stride * n + j % stride; }
    std::size_t at(std::size_t j, Element x) const noexcept { return base(j) + x * stride; }
};

}  // namespace ckit::detail
