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

#include "ringcollatz/budget.hpp"

#include <cstdlib>
#include <string>

namespace ringcollatz {

std::uint64_t work_budget_from_env() {
  const char* v = std::getenv("RINGCOLLATZ_WORK_BUDGET");
  if (v == nullptr || *v == '\0') return kDefaultWorkBudget;
  try {
    const auto n = std::stoull(v);
    return n == 0 ? kDefaultWorkBudget : n;
  } catch (const std::exception&) {
    return kDefaultWorkBudget;
  }
}

}  // namespace ringcollatz
