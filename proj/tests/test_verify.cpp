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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "ringcollatz/error.hpp"
#include "ringcollatz/verify.hpp"

using namespace ringcollatz;

TEST_CASE("suite registry") {
  const auto& names = suite_names();
  CHECK(names.size() == 10);
  CHECK(std::find(names.begin(), names.end(), "kummer") != names.end());
  CHECK(std::find(names.begin(), names.end(), "fq-census") != names.end());
  CHECK_THROWS_AS(run_suite("nosuchsuite"), Error);
}

TEST_CASE("randomized suites are reproducible from the seed") {
  const auto a = run_suite("infinite-ring", 42);
  const auto b = run_suite("infinite-ring", 42);
  CHECK(a.passed());
  REQUIRE(a.checks.size() == b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) CHECK(a.checks[i].detail == b.checks[i].detail);
  for (std::uint64_t seed : {1, 2, 3}) CHECK(run_suite("kummer", seed).passed());
}

TEST_CASE("a report fails on any failed check or on time") {
  SuiteReport r;
  CHECK_FALSE(r.passed());
  r.checks.push_back({"x", true, ""});
  CHECK(r.passed());
  r.seconds = 61;
  CHECK_FALSE(r.passed());
  r.seconds = 0;
  r.checks.push_back({"y", false, ""});
  CHECK_FALSE(r.passed());
}
