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

#include "ringcollatz/valuation.hpp"

#include "ringcollatz/error.hpp"

namespace ringcollatz {

namespace {

void require_prime(std::int64_t p) {
  if (!is_prime(p)) fail(Errc::not_prime, std::to_string(p) + " is not prime");
}

unsigned long as_ul(std::int64_t p) { return static_cast<unsigned long>(p); }

}  // namespace

std::uint64_t vp(std::int64_t p, const mpz_class& n) {
  require_prime(p);
  if (n == 0) fail(Errc::infinite_valuation, "v_p(0) is infinite");
  mpz_class m = abs(n);
  std::uint64_t e = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), as_ul(p))) {
    mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), as_ul(p));
    ++e;
  }
  return e;
}

std::uint64_t digit_sum(std::int64_t p, const mpz_class& n) {
  require_prime(p);
  if (n < 0) fail(Errc::invalid_argument, "digit_sum: n must be non-negative");
  mpz_class m = n;
  std::uint64_t s = 0;
  while (m > 0) {
    s += mpz_fdiv_q_ui(m.get_mpz_t(), m.get_mpz_t(), as_ul(p));
  }
  return s;
}

std::uint64_t kummer_numerator(std::int64_t p, const mpz_class& n, const mpz_class& m) {
  if (m < 0 || m > n) fail(Errc::invalid_argument, "binomial valuation needs 0 <= m <= n");
  return digit_sum(p, m) + digit_sum(p, n - m) - digit_sum(p, n);
}

std::uint64_t binom_valuation(std::int64_t p, const mpz_class& n, const mpz_class& m) {
  const std::uint64_t num = kummer_numerator(p, n, m);
  if (num % static_cast<std::uint64_t>(p - 1) != 0) {
    fail(Errc::internal, "Kummer numerator not divisible by p-1");
  }
  return num / static_cast<std::uint64_t>(p - 1);
}

int floor_log(std::int64_t p, std::uint64_t n) {
  if (n == 0) fail(Errc::invalid_argument, "floor_log: n must be >= 1");
  int r = 0;
  while (n >= static_cast<std::uint64_t>(p)) {
    n /= static_cast<std::uint64_t>(p);
    ++r;
  }
  return r;
}

std::uint64_t divisible_binom_valuation(std::int64_t p, const mpz_class& a, const mpz_class& n) {
  require_prime(p);
  if (n < 1 || a < n) fail(Errc::precondition_failed, "precondition failed: need a >= n >= 1");
  // floor(log_p n) for arbitrary-precision n.
  std::uint64_t lg = 0;
  for (mpz_class t = n / p; t > 0; t /= p) ++lg;
  const std::uint64_t va = vp(p, a);
  if (va < lg + 1) {
    fail(Errc::precondition_failed, "precondition failed: v_p(a) < floor(log_p n) + 1");
  }
  return va - vp(p, n);
}

mpz_class threshold_constant(const CharFactorization& cf, std::uint64_t n) {
  if (n == 0) fail(Errc::invalid_argument, "threshold constant needs n >= 1");
  mpz_class k = 1;
  for (const auto& [p, alpha] : cf.factors) {
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), as_ul(p), static_cast<unsigned long>(alpha + floor_log(p, n)));
    k *= pw;
  }
  return k;
}

std::pair<bool, bool> divisibility_equivalence_check(const CharFactorization& cf,
                                                     std::uint64_t n, std::uint64_t k) {
  if (n < 1 || k < n) fail(Errc::invalid_argument, "divisibility check needs k >= n >= 1");
  const mpz_class kk(static_cast<unsigned long>(k));
  const bool side1 = mpz_divisible_p(kk.get_mpz_t(), threshold_constant(cf, n).get_mpz_t()) != 0;
  const mpz_class modulus(static_cast<long>(cf.product));
  bool side2 = true;
  mpz_class c;
  for (std::uint64_t j = 1; j <= n && side2; ++j) {
    mpz_bin_uiui(c.get_mpz_t(), k, j);
    side2 = mpz_divisible_p(c.get_mpz_t(), modulus.get_mpz_t()) != 0;
  }
  return {side1, side2};
}

}  // namespace ringcollatz
