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

#include "ckit/debug.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace ckit {

namespace {

bool initial_setting() noexcept {
    if (const char* env = std::getenv("COMMUTATOR_KIT_DEBUG")) {
        return std::strcmp(env, "1") == 0;
    }
#ifdef NDEBUG
    return false;
#else
    return true;
#endif
}

std::atomic<bool>& flag() noexcept {
    static std::atomic<bool> enabled{initial_setting()};
    return enabled;
}

}  // namespace

bool debug_asserts_enabled() noexcept { return flag().load(std::memory_order_relaxed); }

void set_debug_asserts(bool enabled) noexcept { flag().store(enabled, std::memory_order_relaxed); }

}  // namespace ckit
