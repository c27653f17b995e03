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
#include <set>

#include "ringcollatz/dyadic.hpp"
#include "ringcollatz/error.hpp"

using namespace ringcollatz;

namespace {

DyadicRational Q(const char* s) { return DyadicRational::parse(s); }

std::vector<DyadicRational> Qs(std::initializer_list<const char*> s) {
  std::vector<DyadicRational> out;
  for (auto x : s) out.push_back(Q(x));
  return out;
}

bool same_cycle(const std::vector<DyadicRational>& a, const std::vector<DyadicRational>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    bool eq = true;
    for (std::size_t i = 0; i < a.size(); ++i) eq = eq && a[(r + i) % a.size()] == b[i];
    if (eq) return true;
  }
  return false;
}

// Binary necklaces of length n with primitive period n, by canonical-rotation test.
std::uint64_t necklace_oracle(std::size_t n) {
  std::uint64_t count = 0;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    auto rot = [&](std::size_t r) { return ((m << r) | (m >> (n - r))) & ((std::uint64_t{1} << n) - 1); };
    bool least = true, primitive = true;
    for (std::size_t r = 1; r < n; ++r) {
      least = least && rot(r) >= m;
      primitive = primitive && rot(r) != m;
    }
    count += least && primitive;
  }
  return count;
}

}  // namespace

TEST_CASE("rational representation") {
  CHECK(Q("6/-10").str() == "-3/5");
  CHECK(Q("4/2").str() == "2");
  CHECK(Q("0").str() == "0");
  CHECK_THROWS_AS(Q("1/2"), Error);
  CHECK_THROWS_AS(Q("1/0"), Error);
  CHECK_THROWS_AS(Q("abc"), Error);
  CHECK(Q("-7").is_odd());
  CHECK_FALSE(Q("8/5").is_odd());
}

TEST_CASE("full and condensed maps") {
  CHECK(dyadic_T(Q("1")) == Q("4"));
  CHECK(dyadic_T(Q("4")) == Q("2"));
  CHECK(dyadic_T(Q("2")) == Q("1"));
  CHECK(dyadic_T(Q("1/5")) == Q("8/5"));
  CHECK(dyadic_T(Q("0")) == Q("0"));
  CHECK(dyadic_T_condensed(Q("-1")) == Q("-1"));
  CHECK(dyadic_T_condensed(Q("1")) == Q("2"));
  CHECK(dyadic_T_condensed(Q("2")) == Q("1"));
  CHECK(dyadic_T_condensed(Q("0")) == Q("0"));
}

TEST_CASE("condensed and full maps correspond") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 300; ++i) {
    const long num = std::uniform_int_distribution<long>(-10000, 10000)(rng);
    const long den = 2 * std::uniform_int_distribution<long>(0, 500)(rng) + 1;
    const DyadicRational f{mpz_class(num), mpz_class(den)};
    const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 40)(rng);
    const auto cv = z2_parity_vector(f, n, MapKind::condensed);
    std::size_t s = 0;
    for (auto b : cv) s += static_cast<std::size_t>(b);
    DyadicRational a = f, b = f;
    for (std::size_t k = 0; k < n; ++k) a = dyadic_T_condensed(a);
    for (std::size_t k = 0; k < n + s; ++k) b = dyadic_T(b);
    CHECK(a == b);
    const auto fv = z2_parity_vector(f, n + s, MapKind::full);
    CHECK(fv == expand(cv));
    CHECK(is_zero_dense(fv));
  }
}

TEST_CASE("periodic points from parity vectors") {
  CHECK(periodic_from_parity_z2({1}) == Q("-1"));
  CHECK(periodic_from_parity_z2({1, 0}) == Q("1"));
  CHECK(periodic_from_parity_z2({1, 0, 0}) == Q("1/5"));
  CHECK(periodic_from_parity_z2({0, 0, 0}) == Q("0"));
  CHECK_THROWS_AS(periodic_from_parity_z2({2}), Error);
  CHECK_THROWS_AS(periodic_from_parity_z2({}), Error);
  CHECK(periodic_from_cyclic_parity_z2({1, 0, 0}) == Q("1"));
  CHECK(periodic_from_cyclic_parity_z2({1, 0, 0, 0}) == Q("1/5"));
  CHECK(periodic_from_cyclic_parity_z2({0, 1}) == Q("-2"));
  CHECK_THROWS_AS(periodic_from_cyclic_parity_z2({1, 1}), Error);

  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      ParityVector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>((m >> i) & 1U);
      const auto f = periodic_from_parity_z2(v);
      CHECK(mpz_odd_p(f.den().get_mpz_t()));
      DyadicRational g = f;
      for (std::size_t k = 0; k < n; ++k) g = dyadic_T_condensed(g);
      CHECK(g == f);
      CHECK(z2_parity_vector(f, n, MapKind::condensed) == v);
      if (is_cyclically_zero_dense(v)) {
        const auto h = periodic_from_cyclic_parity_z2(v);
        DyadicRational k = h;
        for (std::size_t i = 0; i < n; ++i) k = dyadic_T(k);
        CHECK(k == h);
        CHECK(z2_parity_vector(h, n, MapKind::full) == v);
      }
    }
  }
}

TEST_CASE("full-map cycles of small length") {
  CHECK(enumerate_z2_cycles(1) == std::vector<std::vector<DyadicRational>>{Qs({"0"})});
  const auto c2 = enumerate_z2_cycles(2);
  REQUIRE(c2.size() == 1);
  CHECK(same_cycle(c2[0], Qs({"-1", "-2"})));
  const auto c3 = enumerate_z2_cycles(3);
  REQUIRE(c3.size() == 1);
  CHECK(same_cycle(c3[0], Qs({"1", "4", "2"})));
  const auto c4 = enumerate_z2_cycles(4);
  REQUIRE(c4.size() == 1);
  CHECK(same_cycle(c4[0], Qs({"1/5", "8/5", "4/5", "2/5"})));
  const auto c5 = enumerate_z2_cycles(5);
  REQUIRE(c5.size() == 2);
  for (const auto& want : {Qs({"-10", "-5", "-14", "-7", "-20"}), Qs({"8/13", "4/13", "2/13", "1/13", "16/13"})}) {
    CHECK(std::any_of(c5.begin(), c5.end(), [&](const auto& c) { return same_cycle(c, want); }));
  }
}

TEST_CASE("cycle counts") {
  const std::vector<long> z{1, 1, 1, 1, 2, 2, 4};
  for (std::size_t n = 1; n <= z.size(); ++n) CHECK(z2_cycle_count(n) == z[n - 1]);
  CHECK(condensed_cycle_count(1) == 2);
  CHECK(condensed_cycle_count(2) == 1);
  CHECK(condensed_cycle_count(6) == 9);
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto cycles = enumerate_z2_cycles(n);
    CHECK(cycles.size() == z2_cycle_count(n));
    std::set<DyadicRational> members;
    for (const auto& c : cycles) {
      CHECK(c.size() == n);
      CHECK(dyadic_T(c.back()) == c.front());
      members.insert(c.begin(), c.end());
    }
    CHECK(members.size() == n * cycles.size());
    CHECK(count_primitive_necklaces(n) == necklace_oracle(n));
    CHECK(condensed_cycle_count(n) == necklace_oracle(n));
  }
  const auto fixed = enumerate_z2_condensed_cycles(1);
  REQUIRE(fixed.size() == 2);
  CHECK(fixed[0] == Qs({"0"}));
  CHECK(fixed[1] == Qs({"-1"}));
  const auto two = enumerate_z2_condensed_cycles(2);
  REQUIRE(two.size() == 1);
  CHECK(same_cycle(two[0], Qs({"2", "1"})));
}

TEST_CASE("2-adic digits") {
  CHECK(dyadic_digits(Q("-1"), 4) == std::vector<int>{1, 1, 1, 1});
  CHECK(dyadic_digits(Q("1/5"), 4) == std::vector<int>{1, 0, 1, 1});
  CHECK(dyadic_digits(Q("0"), 4) == std::vector<int>{0, 0, 0, 0});
  CHECK(dyadic_digits(Q("6"), 4) == std::vector<int>{0, 1, 1, 0});
  CHECK(dyadic_digits(Q("1/3"), 1).size() == 1);
  // digits of f times den agree with num mod 2^m.
  const auto d = dyadic_digits(Q("-7/13"), 20);
  mpz_class v = 0;
  for (std::size_t i = 0; i < d.size(); ++i) v += mpz_class(d[i]) << static_cast<mp_bitcnt_t>(i);
  CHECK(mpz_class((v * 13 + 7) % (mpz_class(1) << 20)) == 0);
}

TEST_CASE("orbits of rationals") {
  const auto a = dyadic_orbit(Q("7"), 1000);
  CHECK(a.found);
  CHECK(same_cycle(a.cycle, Qs({"1", "4", "2"})));
  const auto b = dyadic_orbit(Q("1/5"), 100);
  CHECK(b.preperiod == 0);
  CHECK(b.cycle.size() == 4);
  const auto c = dyadic_orbit(Q("27"), 10);
  CHECK_FALSE(c.found);
  const auto d = dyadic_orbit(Q("-1"), 10, MapKind::condensed);
  CHECK(d.cycle == Qs({"-1"}));
}
