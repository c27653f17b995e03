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
#include "ringcollatz/io.hpp"
#include "ringcollatz/series.hpp"

using namespace ringcollatz;

namespace {

RationalSeries S(const char* ring, const char* text) { return parse_series(parse_ring(ring), text); }

// One step of T on a truncated coefficient vector; the result is exact in
// one fewer position when the shift branch is taken.
std::vector<RingElem> naive_step(const Ring& r, std::vector<RingElem> c) {
  if (r.is_zero(c.front())) {
    c.erase(c.begin());
    return c;
  }
  std::vector<RingElem> out(c.size(), r.zero());
  for (std::size_t i = 1; i < c.size(); ++i) out[i] = r.add(c[i], c[i - 1]);
  return out;
}

Poly random_poly(const Ring& r, int max_deg, std::mt19937_64& rng) {
  const int d = std::uniform_int_distribution<int>(-1, max_deg)(rng);
  std::vector<RingElem> c;
  for (int i = 0; i <= d; ++i) {
    c.push_back(r.from_code(std::uniform_int_distribution<std::int64_t>(0, *r.cardinality() - 1)(rng)));
  }
  return Poly(r, std::move(c));
}

}  // namespace

TEST_CASE("full map") {
  CHECK(series_T(S("F2", "{u:[1],v:[1]}")).is_zero());
  CHECK(series_T(S("F2", "{u:[1]}")) == S("F2", "{u:[0,1]}"));
  const auto f = S("F2", "{u:[1],v:[1,1]}");
  const auto t1 = series_T(f);
  CHECK(t1.u() == parse_poly(parse_ring("F2"), "[0,0,1]"));
  const auto t2 = series_T(t1);
  CHECK(t2.u() == parse_poly(parse_ring("F2"), "[0,1]"));
  CHECK(series_T(t2) == f);
}

TEST_CASE("condensed map") {
  CHECK(series_T_condensed(S("F2", "{u:[1]}")) == S("F2", "{u:[1]}"));
  CHECK(series_T_condensed(S("F2", "{u:[]}")).is_zero());
  CHECK(series_T_condensed(S("F3", "{u:[2]}")) == S("F3", "{u:[2]}"));
}

TEST_CASE("parity vectors") {
  CHECK(parity_vector(S("F2", "{u:[1]}"), 4, MapKind::full) == ParityVector{1, 0, 1, 0});
  CHECK(parity_vector(S("F2", "{u:[1]}"), 3, MapKind::condensed) == ParityVector{1, 1, 1});
  CHECK(parity_vector(S("F5", "{u:[]}"), 5, MapKind::full) == ParityVector(5, 0));
  std::mt19937_64 rng(2);
  for (const char* s : {"F2", "F3", "F4", "Z/6"}) {
    const Ring r = parse_ring(s);
    for (int i = 0; i < 200; ++i) {
      const RationalSeries f(random_poly(r, 5, rng), random_poly(r, 3, rng));
      CHECK(is_zero_dense(parity_vector(f, 30, MapKind::full)));
    }
  }
}

TEST_CASE("condensed and full maps correspond") {
  std::mt19937_64 rng(4);
  for (const char* s : {"F2", "F3", "F4", "Z/4"}) {
    const Ring r = parse_ring(s);
    for (int i = 0; i < 100; ++i) {
      const RationalSeries f(random_poly(r, 5, rng), random_poly(r, 3, rng));
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 30)(rng);
      const auto cv = parity_vector(f, n, MapKind::condensed);
      std::size_t s = 0;
      for (auto c : cv) s += c != 0;
      RationalSeries a = f, b = f;
      for (std::size_t k = 0; k < n; ++k) a = series_T_condensed(a);
      for (std::size_t k = 0; k < n + s; ++k) b = series_T(b);
      CHECK(a == b);
      CHECK(parity_vector(f, n + s, MapKind::full) == expand(cv));
    }
  }
}

TEST_CASE("rational form agrees with truncated power series") {
  std::mt19937_64 rng(6);
  for (const char* s : {"F2", "F3", "F4", "Z/6"}) {
    const Ring r = parse_ring(s);
    for (int i = 0; i < 100; ++i) {
      const RationalSeries f(random_poly(r, 5, rng), random_poly(r, 4, rng));
      const std::size_t n = std::uniform_int_distribution<std::size_t>(1, 30)(rng);
      const std::size_t terms = 3 * (static_cast<std::size_t>(std::max(f.u().degree(), 0) + std::max(f.v().degree(), 0)) + n);
      auto c = f.truncate(terms);
      RationalSeries g = f;
      for (std::size_t k = 0; k < n; ++k) {
        c = naive_step(r, c);
        g = series_T(g);
        const auto exact = g.truncate(c.size());
        CHECK(exact == c);
      }
    }
  }
}

TEST_CASE("series equality compares values, not representations") {
  const Ring f3 = parse_ring("F3");
  // u / (1 + x v) == (u (1 + x)) / ((1 + x v)(1 + x)).
  const auto a = S("F3", "{u:[1,2],v:[0,1]}");
  const Poly one_plus_x = parse_poly(f3, "[1,1]");
  const Poly den = a.denominator() * one_plus_x;
  const RationalSeries b(a.u() * one_plus_x, divide_by_x(den - parse_poly(f3, "[1]")));
  CHECK(a == b);
  CHECK_FALSE(a == S("F3", "{u:[1,2],v:[0,2]}"));
  CHECK(a.truncate(12) == b.truncate(12));
}

TEST_CASE("construction from condensed parity vectors") {
  CHECK(periodic_from_parity(parse_ring("F2"), {1}) == S("F2", "{u:[1]}"));
  CHECK(periodic_from_parity(parse_ring("F2"), {0}).is_zero());
  const auto f = periodic_from_parity(parse_ring("F2"), {1, 0});
  CHECK(format_series(f) == "{u:[1],v:[1,1]}");
  CHECK(series_T_condensed(series_T_condensed(f)) == f);
  CHECK_FALSE(series_T_condensed(f) == f);

  for (std::int64_t q : {2, 3, 4}) {
    const Ring r = Ring::galois_field(q);
    for (std::size_t n = 1; n <= 5; ++n) {
      std::vector<RationalSeries> built;
      ParityVector v(n, 0);
      while (true) {
        const auto g = periodic_from_parity(r, v);
        RationalSeries h = g;
        for (std::size_t k = 0; k < n; ++k) h = series_T_condensed(h);
        CHECK(h == g);
        CHECK(parity_vector(g, n, MapKind::condensed) == v);
        built.push_back(g);
        std::size_t pos = n;
        while (pos > 0 && ++v[pos - 1] == q) v[--pos] = 0;
        if (pos == 0) break;
      }
      if (q <= 3) {
        for (std::size_t a = 0; a < built.size(); ++a) {
          for (std::size_t b = a + 1; b < built.size(); ++b) CHECK_FALSE(built[a] == built[b]);
        }
      }
    }
  }
}

TEST_CASE("construction from full parity vectors") {
  const Ring f2 = parse_ring("F2");
  const auto f = periodic_from_cyclic_parity(f2, {1, 0, 0});
  CHECK(f == S("F2", "{u:[1],v:[1,1]}"));
  CHECK(periodic_from_cyclic_parity(f2, {0, 0}).is_zero());
  const auto g = periodic_from_cyclic_parity(parse_ring("F3"), {2, 0});
  CHECK(g == S("F3", "{u:[2]}"));
  CHECK_FALSE(g == S("F3", "{u:[2],v:[1,2]}"));
  CHECK(series_T(series_T(g)) == g);
  CHECK_THROWS_AS(periodic_from_cyclic_parity(f2, {1, 0, 1}), Error);

  for (std::int64_t q : {2, 3, 4}) {
    const Ring r = Ring::galois_field(q);
    for (std::size_t n = 1; n <= 8; ++n) {
      for (const auto& v : enumerate_cyclically_zero_dense(q, n)) {
        const auto h = periodic_from_cyclic_parity(r, v);
        RationalSeries k = h;
        for (std::size_t i = 0; i < n; ++i) k = series_T(k);
        CHECK(k == h);
        CHECK(parity_vector(h, n, MapKind::full) == v);
      }
    }
  }
}

TEST_CASE("series orbits") {
  const auto a = series_orbit(S("F2", "{u:[1]}"));
  CHECK(a.preperiod == 0);
  CHECK(a.cycle.size() == 2);
  CHECK(a.parity_trace == ParityVector{1, 0});

  const auto b = series_orbit(S("F2", "{u:[1],v:[1]}"));
  CHECK(b.preperiod == 1);
  CHECK(b.cycle.size() == 1);
  CHECK(b.cycle.front().is_zero());

  for (const auto& v : enumerate_cyclically_zero_dense(3, 6)) {
    const auto rep = series_orbit(periodic_from_cyclic_parity(parse_ring("F3"), v));
    CHECK(rep.preperiod == 0);
    CHECK(rep.cycle.size() == primitive_period(v));
  }
  CHECK_THROWS_AS(series_orbit(S("F2[t]", "{u:[1]}")), Error);
  try {
    series_orbit(S("F5", "{u:[1,2,3,4],v:[1,1,1,1]}"), 1);
    FAIL("expected a budget error");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::budget_exceeded);
  }
}

TEST_CASE("omega census") {
  const auto c = omega_census(parse_ring("F2"), 3);
  CHECK(c.omega_size == 4);
  CHECK(c.cycles.size() == 1);
  const auto z4 = omega_census(parse_ring("Z/4"), 3);
  CHECK(z4.omega_size == 10);
  CHECK(z4.cycles.size() == 3);
  const auto one = omega_census(parse_ring("F7"), 1);
  CHECK(one.omega_size == 1);
  REQUIRE(one.cycles.size() == 1);
  CHECK(one.cycles.front().front().is_zero());
  for (std::int64_t q : {2, 3, 4, 5}) {
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto t = omega_census(Ring::galois_field(q), n);
      CHECK(t.omega_size == j_count(q, n));
      CHECK(t.cycles.size() == z_count(q, n));
      for (const auto& cyc : t.cycles) {
        CHECK(cyc.size() == n);
        CHECK(series_T(cyc.back()) == cyc.front());
      }
    }
  }
}
