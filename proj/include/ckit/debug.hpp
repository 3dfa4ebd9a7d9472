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

namespace ckit {

/// Extra self-checks on results (compatibility of every commutator).
/// Defaults to on in builds without NDEBUG, or when COMMUTATOR_KIT_DEBUG=1.
bool debug_asserts_enabled() noexcept;
void set_debug_asserts(bool enabled) noexcept;

}  // namespace ckit
