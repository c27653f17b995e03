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
#include <utility>

#include <gmpxx.h>

#include "ringcollatz/ring.hpp"

namespace ringcollatz {

/// Largest e with p^e | n. Throws Errc::infinite_valuation for n == 0.
std::uint64_t vp(std::int64_t p, const mpz_class& n);

/// Sum of the base-p digits of n >= 0.
std::uint64_t digit_sum(std::int64_t p, const mpz_class& n);

/// v_p(C(n, m)) by Kummer's digit-sum formula.
std::uint64_t binom_valuation(std::int64_t p, const mpz_class& n, const mpz_class& m);

/// The raw Kummer numerator S_p(m) + S_p(n-m) - S_p(n), before division by p-1.
std::uint64_t kummer_numerator(std::int64_t p, const mpz_class& n, const mpz_class& m);

/// v_p(a) - v_p(n), valid when a >= n >= 1 and v_p(a) >= floor(log_p n) + 1.
/// Throws Errc::precondition_failed otherwise.
std::uint64_t divisible_binom_valuation(std::int64_t p, const mpz_class& a, const mpz_class& n);

/// floor(log_p n) for n >= 1, by repeated division.
int floor_log(std::int64_t p, std::uint64_t n);

/// K(n) = prod p_i^(alpha_i + floor(log_{p_i} n)).
mpz_class threshold_constant(const CharFactorization& cf, std::uint64_t n);

/// (K(n) | k, prod p_i^alpha_i | C(k, j) for all 1 <= j <= n). The two always
/// agree; the second side is computed from exact binomials.
std::pair<bool, bool> divisibility_equivalence_check(const CharFactorization& cf,
                                                     std::uint64_t n, std::uint64_t k);

}  // namespace ringcollatz
