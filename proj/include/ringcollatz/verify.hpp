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
#include <string>
#include <vector>

namespace ringcollatz {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::string suite;
  std::vector<CheckResult> checks;
  double seconds = 0.0;
  double time_limit = 60.0;

  bool within_time() const { return seconds < time_limit; }
  bool passed() const;
};

/// Names accepted by run_suite, in acceptance order.
const std::vector<std::string>& suite_names();

/// Runs one named suite. Randomized checks draw from `seed`.
/// Throws Errc::invalid_argument for an unknown name.
SuiteReport run_suite(const std::string& name, std::uint64_t seed = 1);

}  // namespace ringcollatz
