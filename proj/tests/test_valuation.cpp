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

#include <random>

#include "ringcollatz/error.hpp"
#include "ringcollatz/valuation.hpp"

using namespace ringcollatz;

namespace {

// Valuation by repeated exact division.
std::uint64_t vp_oracle(std::int64_t p, mpz_class n) {
  std::uint64_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

mpz_class binom(unsigned long n, unsigned long m) {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, m);
  return b;
}

CharFactorization cf_of(std::int64_t n) { return characteristic_factorization(Ring::zmod(n)); }

}  // namespace

TEST_CASE("vp") {
  CHECK(vp(2, 12) == 2);
  CHECK(vp(3, 7) == 0);
  CHECK(vp(5, 250) == 3);
  CHECK(vp(2, -8) == 3);
  mpz_class big;
  mpz_ui_pow_ui(big.get_mpz_t(), 3, 200);
  CHECK(vp(3, big * 7) == 200);
  CHECK_THROWS_AS(vp(2, 0), Error);
  try {
    vp(2, 0);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::infinite_valuation);
  }
}

TEST_CASE("digit sums") {
  CHECK(digit_sum(2, 5) == 2);
  CHECK(digit_sum(3, 8) == 4);
  CHECK(digit_sum(7, 0) == 0);
  CHECK(digit_sum(5, 624) == 16);
  CHECK_THROWS_AS(digit_sum(10, 9999), Error);
}

TEST_CASE("binomial valuations") {
  CHECK(binom_valuation(2, 4, 2) == 1);
  CHECK(binom_valuation(3, 9, 1) == 2);
  CHECK(binom_valuation(2, 7, 3) == 0);
  CHECK_THROWS_AS(binom_valuation(2, 3, 4), Error);

  std::mt19937_64 rng(11);
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (int i = 0; i < 500; ++i) {
      const unsigned long n = std::uniform_int_distribution<unsigned long>(0, 2000)(rng);
      const unsigned long m = std::uniform_int_distribution<unsigned long>(0, n)(rng);
      CHECK(binom_valuation(p, n, m) == vp_oracle(p, binom(n, m)));
      CHECK(kummer_numerator(p, n, m) % static_cast<std::uint64_t>(p - 1) == 0);
    }
  }
}

TEST_CASE("valuation shortcut for highly divisible top index") {
  CHECK(divisible_binom_valuation(2, 8, 2) == 2);
  CHECK(divisible_binom_valuation(3, 27, 9) == 1);
  try {
    divisible_binom_valuation(2, 6, 4);
    FAIL("expected precondition failure");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::precondition_failed);
  }
  for (std::int64_t p : {2, 3, 5}) {
    for (unsigned long a = 1; a <= 600; ++a) {
      for (unsigned long n = 1; n <= a; ++n) {
        if (vp_oracle(p, a) < static_cast<std::uint64_t>(floor_log(p, n)) + 1) continue;
        CHECK(divisible_binom_valuation(p, a, n) == vp_oracle(p, binom(a, n)));
      }
    }
  }
}

TEST_CASE("floor_log") {
  CHECK(floor_log(2, 1) == 0);
  CHECK(floor_log(2, 7) == 2);
  CHECK(floor_log(2, 8) == 3);
  CHECK(floor_log(3, 26) == 2);
  CHECK(floor_log(3, 27) == 3);
  CHECK(floor_log(10, 999'999'999'999ULL) == 11);
}

TEST_CASE("threshold constant") {
  CHECK(threshold_constant(cf_of(4), 1) == 4);
  CHECK(threshold_constant(cf_of(12), 3) == 72);
  CHECK(threshold_constant(cf_of(3), 2) == 3);
  CHECK(threshold_constant(cf_of(2), 2) == 4);
  // 12, n = 100: 2^(2+6) 3^(1+4).
  CHECK(threshold_constant(cf_of(12), 100) == mpz_class(256 * 243));
  CHECK_THROWS_AS(threshold_constant(cf_of(4), 0), Error);
  // Exceeds 64 bits without overflow.
  mpz_class big = threshold_constant(cf_of(2 * 3 * 5 * 7 * 11 * 13), 1'000'000'000'000ULL);
  CHECK(mpz_sizeinbase(big.get_mpz_t(), 2) > 64);
}

TEST_CASE("threshold divisibility equivalence") {
  CHECK(divisibility_equivalence_check(cf_of(4), 1, 4) == std::pair{true, true});
  CHECK(divisibility_equivalence_check(cf_of(4), 1, 2) == std::pair{false, false});
  CHECK(divisibility_equivalence_check(cf_of(2), 2, 4) == std::pair{true, true});
  CHECK_THROWS_AS(divisibility_equivalence_check(cf_of(4), 3, 2), Error);
  for (std::int64_t chr : {2, 3, 4, 6, 8, 9, 12}) {
    const auto cf = cf_of(chr);
    for (std::uint64_t n = 1; n <= 12; ++n) {
      for (std::uint64_t k = n; k <= 200; ++k) {
        const auto [lhs, rhs] = divisibility_equivalence_check(cf, n, k);
        CHECK(lhs == rhs);
        // Independent second side: every C(k, j), j <= n, divisible by the characteristic.
        bool all = true;
        for (unsigned long j = 1; j <= n; ++j) all = all && binom(k, j) % chr == 0;
        CHECK(rhs == all);
      }
    }
  }
}
