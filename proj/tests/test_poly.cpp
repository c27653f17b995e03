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

#include <map>
#include <random>

#include "ringcollatz/error.hpp"
#include "ringcollatz/fq_census.hpp"
#include "ringcollatz/io.hpp"
#include "ringcollatz/poly.hpp"

using namespace ringcollatz;

namespace {

Poly P(const char* ring, const char* text) { return parse_poly(parse_ring(ring), text); }

// Orbit by storing every visited polynomial: (preperiod, period).
std::pair<std::size_t, std::size_t> naive_orbit(const Poly& f, std::size_t limit = 100000) {
  std::map<Poly, std::size_t> seen;
  Poly g = f;
  for (std::size_t i = 0; i < limit; ++i) {
    auto [it, fresh] = seen.emplace(g, i);
    if (!fresh) return {it->second, i - it->second};
    g = collatz_step(g);
  }
  FAIL("naive orbit did not close");
  return {0, 0};
}

Poly random_poly(const Ring& r, int max_deg, std::mt19937_64& rng) {
  const int d = std::uniform_int_distribution<int>(0, max_deg)(rng);
  std::vector<RingElem> c;
  for (int i = 0; i <= d; ++i) {
    if (r.is_finite()) {
      c.push_back(r.from_code(std::uniform_int_distribution<std::int64_t>(0, *r.cardinality() - 1)(rng)));
    } else if (r.kind() == RingKind::poly_over_prime) {
      FpCoeffs t(std::uniform_int_distribution<std::size_t>(1, 3)(rng));
      for (auto& x : t) x = std::uniform_int_distribution<std::int64_t>(0, r.prime() - 1)(rng);
      c.push_back(r.from_coeffs(t));
    } else {
      c.push_back(r.from_int(std::uniform_int_distribution<std::int64_t>(-50, 50)(rng)));
    }
  }
  return Poly(r, std::move(c));
}

Errc error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::internal;
}

}  // namespace

TEST_CASE("collatz step") {
  CHECK(collatz_step(P("F3", "[]")).is_zero());
  CHECK(collatz_step(P("Z/5", "[3]")) == P("Z/5", "[0,3]"));
  CHECK(collatz_step(P("F3", "[1,0,1]")) == P("F3", "[0,1,1,1]"));
  CHECK(collatz_step(P("F3", "[0,1,1,1]")) == P("F3", "[1,1,1]"));

  // Against the defining formula built from ring arithmetic.
  std::mt19937_64 rng(3);
  for (const char* s : {"Z/6", "F4", "F9", "F2[t]", "Z"}) {
    const Ring r = parse_ring(s);
    const Poly x1 = Poly::from_ints(r, {1, 1});
    for (int i = 0; i < 300; ++i) {
      const Poly f = random_poly(r, 6, rng);
      const Poly expected = f.is_odd() ? x1 * f - Poly::constant(r, f.constant_term()) : shift_map(f);
      CHECK(collatz_step(f) == expected);
    }
  }
}

TEST_CASE("pi step") {
  CHECK(pi_step(P("F2", "[]")).is_zero());
  CHECK(pi_step(P("F2", "[1,1]")) == P("F2", "[0,1]"));
  CHECK(pi_step(P("Z/6", "[1,2]")) == P("Z/6", "[3,2]"));

  std::mt19937_64 rng(5);
  for (const char* s : {"Z/12", "F8", "F3[t]"}) {
    const Ring r = parse_ring(s);
    for (int i = 0; i < 200; ++i) {
      const Poly f = random_poly(r, 5, rng);
      // pi = T^2 on odd f whenever T(f) is even, which always holds.
      if (f.is_odd()) CHECK(pi_step(f) == collatz_step(collatz_step(f)));
      // pi^k = sum_j C(k, j) L^j on polynomials of degree <= n.
      const int k = std::uniform_int_distribution<int>(0, 50)(rng);
      Poly lhs = f;
      for (int j = 0; j < k; ++j) lhs = pi_step(lhs);
      Poly rhs(r);
      Poly shifted = f;
      for (int j = 0; j <= k; ++j) {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), k, j);
        rhs = rhs + scale(r.from_int(b), shifted);
        shifted = shift_map(shifted);
      }
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("orbits") {
  const auto a = orbit(P("F2", "[1,1]"));
  CHECK(a.found());
  CHECK(a.preperiod == 2);
  CHECK(a.cycle == std::vector<Poly>{P("F2", "[0,1]"), P("F2", "[1]")});

  const auto b = orbit(P("Z", "[1,1]"), 100);
  CHECK_FALSE(b.found());
  CHECK(b.budget == 100);

  const auto c = orbit(P("Z/4", "[2]"));
  CHECK(c.preperiod == 0);
  CHECK(c.cycle == std::vector<Poly>{P("Z/4", "[2]"), P("Z/4", "[0,2]")});

  const auto t = orbit(P("F3", "[1,1]"), std::nullopt, true);
  REQUIRE(t.trace.has_value());
  CHECK(t.trace->size() == t.preperiod + t.cycle.size());
  CHECK(t.trace->front() == P("F3", "[1,1]"));

  CHECK_THROWS_AS(orbit(P("F2", "[1]"), 0), Error);
}

TEST_CASE("over Z, T^(2k)(x+1) = x+k+1") {
  Poly f = P("Z", "[1,1]");
  for (int k = 1; k <= 30; ++k) {
    f = collatz_step(collatz_step(f));
    CHECK(f == Poly::from_ints(Ring::integers(), {k + 1, 1}));
  }
}

TEST_CASE("orbit reports agree with a naive visited-set orbit") {
  for (const char* s : {"F2", "F3", "Z/4", "Z/6"}) {
    for (const Poly& f : all_polys(parse_ring(s), 3)) {
      const auto rep = orbit(f);
      REQUIRE(rep.found());
      const auto [mu, lambda] = naive_orbit(f);
      CHECK(rep.preperiod == mu);
      CHECK(rep.cycle.size() == lambda);
    }
  }
}

TEST_CASE("degree laws and parity alternation") {
  std::mt19937_64 rng(9);
  for (const char* s : {"F2", "F3", "Z/6", "F4", "F2[t]", "Z"}) {
    const Ring r = parse_ring(s);
    for (int i = 0; i < 10000; ++i) {
      const Poly f = random_poly(r, 8, rng);
      const Poly g = collatz_step(f);
      CHECK(g.degree() <= std::max(f.degree(), -1) + 1);
      CHECK(collatz_step(g).degree() <= f.degree());
    }
  }
  for (const char* s : {"F3", "F4", "Z/6", "Z/4"}) {
    for (const Poly& f : all_polys(parse_ring(s), 2)) {
      const auto rep = orbit(f);
      if (rep.cycle.size() == 1) {
        CHECK(rep.cycle.front().is_zero());
        continue;
      }
      CHECK(rep.cycle.size() % 2 == 0);
      for (std::size_t i = 0; i < rep.cycle.size(); ++i) {
        CHECK(rep.cycle[i].is_odd() != rep.cycle[(i + 1) % rep.cycle.size()].is_odd());
      }
    }
  }
}

TEST_CASE("periodicity criterion") {
  CHECK(is_periodic(P("F3", "[1,0,1]")));
  CHECK_FALSE(is_periodic(P("F3", "[1,1]")));
  CHECK(is_periodic(P("Z/6", "[1,2]")));
  CHECK(is_periodic(P("F5", "[]")));
  CHECK(is_periodic(P("F5", "[3]")));
  CHECK(is_periodic(P("F5", "[0,3]")));
  CHECK_FALSE(is_periodic(P("F2", "[0,1,1]")));
  CHECK(error_code([] { is_periodic(P("Z", "[1]")); }) == Errc::char_zero);
  CHECK(error_code([] { is_periodic(P("Z/6", "[1,0,0,1]"), 10); }) == Errc::cap_exceeded);

  for (const char* s : {"F2", "F3", "Z/4", "Z/6", "F4", "Z/8"}) {
    for (const Poly& f : all_polys(parse_ring(s), 3)) CHECK(is_periodic(f) == (naive_orbit(f).first == 0));
  }
}

TEST_CASE("period bound and exact period") {
  CHECK(period_divisor_bound(P("Z/4", "[1,1]")) == 8);
  CHECK(period_divisor_bound(P("Z/6", "[1,5]")) == 12);
  CHECK(period_divisor_bound(P("F3", "[1,0,1]")) == 6);
  CHECK(exact_period(P("F3", "[1,0,1]")) == 6);
  CHECK(exact_period(P("Z/6", "[1,2]")) == 6);
  CHECK(exact_period(P("F2[t]", "[[1,1],[0,1]]")) == 4);
  CHECK(exact_period(P("F2", "[]")) == 1);
  CHECK(exact_period(P("F2", "[1]")) == 2);
  CHECK(error_code([] { exact_period(P("F3", "[1,1]")); }) == Errc::not_periodic);
  CHECK(error_code([] { period_divisor_bound(P("F3", "[0,1]")); }) == Errc::invalid_argument);
  CHECK(error_code([] { period_divisor_bound(P("F3", "[2]")); }) == Errc::invalid_argument);

  for (const char* s : {"Z/4", "Z/6", "Z/12", "F3", "F4"}) {
    const Ring r = parse_ring(s);
    for (const Poly& f : all_polys(r, 2)) {
      if (!f.is_odd() || f.degree() < 1 || !is_periodic(f)) continue;
      const mpz_class bound = period_divisor_bound(f);
      const auto period = exact_period(f);
      CHECK(naive_orbit(f).second == period);
      CHECK(bound % static_cast<unsigned long>(period) == 0);
      if (r.is_unit(f.leading())) CHECK(bound == period);
    }
  }
}

TEST_CASE("characteristic-zero classification") {
  CHECK(char_zero_classify(P("Z", "[5]")) == CharZeroClass::on_constant_cycle);
  CHECK(char_zero_classify(P("Z", "[0,-5]")) == CharZeroClass::on_constant_cycle);
  CHECK(char_zero_classify(P("Z", "[]")) == CharZeroClass::on_zero_cycle);
  CHECK(char_zero_classify(P("Z", "[1,1]")) == CharZeroClass::not_periodic);
  CHECK(char_zero_classify(P("Z", "[0,0,1]")) == CharZeroClass::not_periodic);
  CHECK(error_code([] { char_zero_classify(P("F2", "[1]")); }) == Errc::positive_char);
  const auto rep = orbit(P("Z", "[7]"));
  CHECK(rep.cycle.size() == 2);
}

TEST_CASE("pre-period bound over fields") {
  CHECK(preperiod_bound_check(P("F2", "[1,1]")));
  CHECK(preperiod_bound_check(P("F3", "[0,1,1]")));
  CHECK(preperiod_bound_check(P("F2", "[1]")));
  CHECK(error_code([] { preperiod_bound_check(P("Z/4", "[1]")); }) == Errc::invalid_argument);
  CHECK(error_code([] { preperiod_bound_check(P("F2", "[]")); }) == Errc::invalid_argument);
  // T^3(x+1) = 1.
  Poly f = P("F2", "[1,1]");
  for (int i = 0; i < 3; ++i) f = collatz_step(f);
  CHECK(f == P("F2", "[1]"));
  for (const char* s : {"F2", "F3", "F4", "F5"}) {
    const Ring r = parse_ring(s);
    for (const Poly& f : all_polys(r, s[1] == '2' ? 5 : 3)) {
      if (f.is_zero()) continue;
      const auto d = static_cast<std::size_t>(f.degree());
      CHECK(naive_orbit(f).first <= static_cast<std::size_t>(r.characteristic()) * d * (d + 1) - d);
    }
  }
}

TEST_CASE("eventual periodicity within the default budget") {
  std::mt19937_64 rng(13);
  for (const char* s : {"Z/4", "Z/6", "F2[t]"}) {
    const Ring r = parse_ring(s);
    for (int i = 0; i < 200; ++i) {
      const Poly f = random_poly(r, 4, rng);
      CHECK(orbit(f).found());
    }
  }
}

TEST_CASE("polynomial ordering is degree-major") {
  CHECK(P("F3", "[2]") < P("F3", "[0,1]"));
  CHECK(P("F3", "[0,1]") < P("F3", "[1,1]"));
  CHECK_FALSE(P("F3", "[]") < P("F3", "[0]"));
  CHECK(P("F3", "[0,0]").is_zero());
}
