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

namespace ringcollatz {

/// A finite parity trace over the alphabet {0, 1, ..., q-1}; symbol 0 is the
/// ring zero. For finite rings the symbols are element codes.
using ParityVector = std::vector<std::int64_t>;

/// No two consecutive nonzero entries.
bool is_zero_dense(const ParityVector& v);
/// Zero dense including the wrap-around pair; (a) with a != 0 is not.
bool is_cyclically_zero_dense(const ParityVector& v);

/// All zero-dense vectors of length n over q symbols, lexicographic order.
std::vector<ParityVector> enumerate_zero_dense(std::int64_t q, std::size_t n,
                                               std::uint64_t work_budget = kDefaultWorkBudget);
/// All cyclically zero-dense vectors of length n over q symbols, lexicographic order.
std::vector<ParityVector> enumerate_cyclically_zero_dense(std::int64_t q, std::size_t n,
                                                          std::uint64_t work_budget = kDefaultWorkBudget);

/// Inserts a 0 after every nonzero entry.
ParityVector expand(const ParityVector& v);
/// Removes the 0 that follows every nonzero entry. Rejects input that is not
/// zero dense or that ends in a nonzero entry.
ParityVector condense(const ParityVector& v);

/// L_0 = 2, L_1 = 1, L_n = L_{n-1} + (q-1) L_{n-2}.
mpz_class lucas_like(std::int64_t q, std::uint64_t n);
/// V_0 = 0, V_1 = 1, V_m = V_{m-1} + (q-1) V_{m-2}.
mpz_class fib_like(std::int64_t q, std::uint64_t m);

/// Number of zero-dense vectors of length n (e_0 = 1).
mpz_class e_count(std::int64_t q, std::uint64_t n);
/// j_n = |F_n|: 1, 2q-1, then e_{n-1} + (q-1) e_{n-3}.
mpz_class j_count(std::int64_t q, std::uint64_t n);
/// i_n = sum_{d | n} mu(d) j_{n/d}.
mpz_class i_count(std::int64_t q, std::uint64_t n);
/// Z_n = i_n / n; throws Errc::internal if not integral.
mpz_class z_count(std::int64_t q, std::uint64_t n);

int mobius(std::uint64_t n);
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Least rotation of v in lexicographic order.
ParityVector min_rotation(const ParityVector& v);
/// Smallest d | n with v equal to its rotation by d.
std::size_t primitive_period(const ParityVector& v);

struct RotationClass {
  ParityVector representative;  // least rotation
  std::size_t period = 0;
  std::vector<ParityVector> members;
};

/// Partitions equal-length vectors into rotation classes, ordered by representative.
std::vector<RotationClass> rotation_orbits(const std::vector<ParityVector>& vectors);

/// Z_n n / alpha^n with alpha = (1 + sqrt(4q-3)) / 2, evaluated with 256-bit
/// binary floating point and rounded to double at the end.
double asymptotic_ratio(std::int64_t q, std::uint64_t n);

struct CountLedgerRow {
  std::uint64_t n = 0;
  mpz_class e, j, i, z;
};

struct CountLedger {
  std::int64_t q = 2;
  std::vector<CountLedgerRow> rows;
};

CountLedger count_ledger(std::int64_t q, std::uint64_t n_min, std::uint64_t n_max);
/// `n,e,j,i,Z` rows.
std::string to_csv(const CountLedger& ledger);

}  // namespace ringcollatz
