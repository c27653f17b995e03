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

#include <gmpxx.h>

#include "ringcollatz/budget.hpp"
#include "ringcollatz/parity.hpp"
#include "ringcollatz/series.hpp"

namespace ringcollatz {

/// A rational number with odd denominator, i.e. an element of Q inside the
/// 2-adic integers. Always reduced with a positive denominator.
class DyadicRational {
 public:
  DyadicRational() = default;
  explicit DyadicRational(const mpz_class& n);
  DyadicRational(const mpz_class& num, const mpz_class& den);
  /// Throws Errc::invalid_argument when the reduced denominator is even.
  explicit DyadicRational(const mpq_class& value);

  const mpq_class& value() const noexcept { return q_; }
  mpz_class num() const { return q_.get_num(); }
  mpz_class den() const { return q_.get_den(); }
  bool is_odd() const { return mpz_odd_p(q_.get_num_mpz_t()) != 0; }

  /// `num/den`, or just `num` when den = 1.
  std::string str() const;
  /// Parses `a` or `a/b`.
  static DyadicRational parse(const std::string& text);

  friend bool operator==(const DyadicRational& a, const DyadicRational& b) { return a.q_ == b.q_; }
  friend bool operator<(const DyadicRational& a, const DyadicRational& b) { return a.q_ < b.q_; }

 private:
  mpq_class q_{0};
};

/// f/2 for even f, 3f+1 for odd f.
DyadicRational dyadic_T(const DyadicRational& f);
/// f/2 for even f, (3f+1)/2 for odd f.
DyadicRational dyadic_T_condensed(const DyadicRational& f);

/// Parities of the first n iterates.
ParityVector z2_parity_vector(const DyadicRational& f, std::size_t n, MapKind which);

/// sum_j v_j 2^j 3^(s_j) / (2^n - 3^s) with s_j = #ones after position j:
/// the point whose condensed orbit has period dividing n and parity vector v.
DyadicRational periodic_from_parity_z2(const ParityVector& bits);

/// The point with T^n(f) = f and full parity vector v (cyclically zero dense).
DyadicRational periodic_from_cyclic_parity_z2(const ParityVector& bits);

/// Full-map cycles of exact length n, one per rotation class of cyclically
/// zero-dense bit vectors with primitive period n. Each cycle starts at the
/// point whose parity vector is the least rotation; cycles are ordered by it.
std::vector<std::vector<DyadicRational>> enumerate_z2_cycles(std::size_t n,
                                                             std::uint64_t work_budget = kDefaultWorkBudget);

/// Condensed-map cycles of exact length n, one per necklace of primitive period n.
std::vector<std::vector<DyadicRational>> enumerate_z2_condensed_cycles(
    std::size_t n, std::uint64_t work_budget = kDefaultWorkBudget);

/// Z_n for q = 2.
mpz_class z2_cycle_count(std::uint64_t n);
/// I(n) = (1/n) sum_{d | n} mu(d) 2^(n/d).
mpz_class condensed_cycle_count(std::uint64_t n);
/// Number of binary necklaces of length n with primitive period n, by enumeration.
std::uint64_t count_primitive_necklaces(std::size_t n, std::uint64_t work_budget = kDefaultWorkBudget);

/// The first m digits of the 2-adic expansion, least significant first.
std::vector<int> dyadic_digits(const DyadicRational& f, std::size_t m);

struct DyadicOrbitReport {
  bool found = false;
  std::uint64_t preperiod = 0;
  std::vector<DyadicRational> cycle;
  std::uint64_t steps_taken = 0;
  std::uint64_t budget = 0;
};

/// Follows the full (or condensed) orbit of f. Exhausting the budget says
/// nothing about divergence.
DyadicOrbitReport dyadic_orbit(const DyadicRational& f, std::uint64_t budget, MapKind which = MapKind::full);

}  // namespace ringcollatz
