/*
 * Copyright 2026 The ringcollatz Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstdint>

namespace ringcollatz {

/// Default ceiling on the number of objects an exhaustive enumeration may touch.
inline constexpr std::uint64_t kDefaultWorkBudget = 50'000'000;

/// The work budget ceiling, overridable through RINGCOLLATZ_WORK_BUDGET.
std::uint64_t work_budget_from_env();

}  // namespace ringcollatz
