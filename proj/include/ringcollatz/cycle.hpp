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
#include <functional>
#include <limits>
#include <vector>

namespace ringcollatz {

/// Outcome of a cycle search on the forward orbit of a point.
template <class T>
struct CycleSearch {
  bool found = false;
  std::uint64_t preperiod = 0;
  std::vector<T> cycle;       // cycle[0] = T^preperiod(start)
  std::uint64_t steps = 0;    // map applications performed
};

/// Brent's cycle detection. `budget` is an allowance on preperiod + period:
/// the detector runs for at most 3 * budget + 2 map applications, which is
/// enough to find any cycle with preperiod + period <= budget.
template <class T, class Step, class Eq = std::equal_to<>>
CycleSearch<T> brent(const T& start, Step&& step, std::uint64_t budget, Eq eq = {}) {
  CycleSearch<T> out;
  const std::uint64_t cap = budget > (std::numeric_limits<std::uint64_t>::max() - 2) / 3
                                ? std::numeric_limits<std::uint64_t>::max()
                                : 3 * budget + 2;
  std::uint64_t power = 1;
  std::uint64_t lambda = 1;
  T tortoise = start;
  T hare = step(start);
  ++out.steps;
  while (!eq(tortoise, hare)) {
    if (out.steps >= cap) return out;
    if (power == lambda) {
      tortoise = hare;
      power *= 2;
      lambda = 0;
    }
    hare = step(hare);
    ++out.steps;
    ++lambda;
  }

  // Locate the first repetition: hare runs lambda ahead of tortoise.
  tortoise = start;
  hare = start;
  for (std::uint64_t i = 0; i < lambda; ++i) {
    hare = step(hare);
    ++out.steps;
  }
  std::uint64_t mu = 0;
  while (!eq(tortoise, hare)) {
    tortoise = step(tortoise);
    hare = step(hare);
    out.steps += 2;
    ++mu;
  }

  out.found = true;
  out.preperiod = mu;
  out.cycle.reserve(lambda);
  T x = tortoise;
  for (std::uint64_t i = 0; i < lambda; ++i) {
    out.cycle.push_back(x);
    if (i + 1 < lambda) x = step(x);
  }
  out.steps += lambda - 1;
  return out;
}

}  // namespace ringcollatz
