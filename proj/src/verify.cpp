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

#include "ringcollatz/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <sstream>

#include "ringcollatz/dyadic.hpp"
#include "ringcollatz/error.hpp"
#include "ringcollatz/fq_census.hpp"
#include "ringcollatz/parity.hpp"
#include "ringcollatz/poly.hpp"
#include "ringcollatz/series.hpp"
#include "ringcollatz/valuation.hpp"

namespace ringcollatz {

bool SuiteReport::passed() const {
  return within_time() && !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

using Rng = std::mt19937_64;

CheckResult check(std::string name, bool ok, std::string detail) {
  return {std::move(name), ok, std::move(detail)};
}

template <class T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Finite-field cycle counts against the closed form.
std::vector<CheckResult> fq_census_suite(Rng&) {
  std::vector<CheckResult> out;
  struct Case {
    const char* ring;
    int cap;
  };
  for (const Case c : {Case{"F2", 6}, Case{"F3", 3}, Case{"F4", 3}, Case{"F5", 2}}) {
    const Ring ring = parse_ring(c.ring);
    const std::int64_t q = *ring.cardinality();
    const std::int64_t p = ring.prime();
    const CensusTable t = brute_force_census(ring, c.cap);
    // A length 2 p^k is complete once every degree below p^k was scanned.
    bool ok = t.count(1) == 1;
    std::set<std::uint64_t> allowed{1};
    std::int64_t pk = 1;
    for (int k = 0; pk <= 4 * (c.cap + 1); ++k, pk *= p) {
      const auto len = 2 * static_cast<std::uint64_t>(pk);
      allowed.insert(len);
      if (pk <= c.cap + 1 && t.count(len) != count_cycles_formula(q, p, k).get_ui()) ok = false;
    }
    std::string detail;
    for (const auto& [len, n] : t.counts) {
      detail += " " + std::to_string(len) + ":" + std::to_string(n);
      if (!allowed.contains(len)) ok = false;
    }
    if (q == 2 && t.counts != std::map<std::uint64_t, std::uint64_t>{{1, 1}, {2, 1}}) ok = false;
    out.push_back(check(std::string(c.ring) + " deg<=" + std::to_string(c.cap) + " census", ok,
                        "lengths" + detail));
  }
  const CensusTable m = matrix_census(parse_ring("F3"), 2);
  out.push_back(check("F3 matrix census k=2", m.count(18) == 56 && count_cycles_formula(3, 3, 2) == 56,
                      "length-18 cycles: " + std::to_string(m.count(18))));
  return out;
}

std::vector<CheckResult> period_law_suite(Rng&) {
  std::vector<CheckResult> out;
  struct Case {
    const char* ring;
    int cap;
  };
  for (const Case c : {Case{"Z/4", 2}, Case{"Z/6", 2}, Case{"Z/12", 2}, Case{"F3", 3}, Case{"F4", 3}}) {
    const Ring ring = parse_ring(c.ring);
    std::uint64_t periodic = 0, equal_cases = 0, violations = 0;
    for (const Poly& f : all_polys(ring, c.cap)) {
      if (!f.is_odd() || f.degree() < 1 || !is_periodic(f)) continue;
      ++periodic;
      const mpz_class bound = period_divisor_bound(f);
      const mpz_class period(static_cast<unsigned long>(exact_period(f)));
      if (bound % period != 0) ++violations;
      if (ring.is_unit(f.leading())) {
        ++equal_cases;
        if (period != bound) ++violations;
      }
    }
    out.push_back(check(std::string(c.ring) + " deg<=" + std::to_string(c.cap), violations == 0 && periodic > 0,
                        std::to_string(periodic) + " periodic odd, " + std::to_string(equal_cases) +
                            " unit-leading, " + std::to_string(violations) + " violations"));
  }
  return out;
}

std::vector<CheckResult> criterion_suite(Rng&) {
  std::vector<CheckResult> out;
  for (const char* name : {"F2", "F3", "Z/4", "Z/6"}) {
    const Ring ring = parse_ring(name);
    std::uint64_t total = 0, agree = 0;
    for (const Poly& f : all_polys(ring, 3)) {
      ++total;
      const OrbitReport rep = orbit(f);
      if (rep.found() && is_periodic(f) == (rep.preperiod == 0)) ++agree;
    }
    out.push_back(check(std::string(name) + " deg<=3", agree == total,
                        std::to_string(agree) + "/" + std::to_string(total) + " agree"));
  }
  return out;
}

std::vector<CheckResult> preperiod_suite(Rng&) {
  std::vector<CheckResult> out;
  for (auto [name, cap] : {std::pair{"F2", 5}, std::pair{"F3", 3}}) {
    const Ring ring = parse_ring(name);
    std::uint64_t total = 0, violations = 0;
    for (const Poly& f : all_polys(ring, cap)) {
      if (f.is_zero()) continue;
      ++total;
      if (!preperiod_bound_check(f)) ++violations;
    }
    out.push_back(check(std::string(name) + " deg<=" + std::to_string(cap), violations == 0,
                        std::to_string(total) + " polynomials, " + std::to_string(violations) + " violations"));
  }
  return out;
}

std::vector<CheckResult> kummer_suite(Rng& rng) {
  std::vector<CheckResult> out;
  std::uint64_t samples = 0, bad = 0;
  mpz_class b;
  for (std::int64_t p : {2, 3, 5, 7}) {
    for (int i = 0; i < 2500; ++i) {
      const unsigned long n = std::uniform_int_distribution<unsigned long>(0, 2000)(rng);
      const unsigned long m = std::uniform_int_distribution<unsigned long>(0, n)(rng);
      mpz_bin_uiui(b.get_mpz_t(), n, m);
      ++samples;
      if (binom_valuation(p, n, m) != vp(p, b)) ++bad;
    }
  }
  out.push_back(check("Kummer vs exact binomial", bad == 0 && samples >= 10000,
                      std::to_string(samples) + " samples, " + std::to_string(bad) + " mismatches"));

  std::uint64_t cases = 0;
  bad = 0;
  for (std::int64_t p : {2, 3, 5}) {
    for (unsigned long a = 1; a <= 3000; ++a) {
      const std::uint64_t va = vp(p, a);
      for (unsigned long n = 1; n <= a; ++n) {
        if (va < static_cast<std::uint64_t>(floor_log(p, n)) + 1) break;
        mpz_bin_uiui(b.get_mpz_t(), a, n);
        ++cases;
        const std::uint64_t f = divisible_binom_valuation(p, a, n);
        if (f != binom_valuation(p, a, n) || f != vp(p, b)) ++bad;
      }
    }
  }
  out.push_back(check("valuation shortcut, p in {2,3,5}, a<=3000", bad == 0 && cases > 0,
                      std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches"));

  cases = 0;
  bad = 0;
  for (std::int64_t chr : {2, 3, 4, 6, 8, 9, 12}) {
    const CharFactorization cf = characteristic_factorization(Ring::zmod(chr));
    for (std::uint64_t n = 1; n <= 12; ++n) {
      for (std::uint64_t k = n; k <= 600; ++k) {
        ++cases;
        const auto [lhs, rhs] = divisibility_equivalence_check(cf, n, k);
        if (lhs != rhs) ++bad;
      }
    }
  }
  out.push_back(check("threshold divisibility equivalence", bad == 0,
                      std::to_string(cases) + " cases, " + std::to_string(bad) + " mismatches"));
  return out;
}

std::vector<CheckResult> series_census_suite(Rng&) {
  std::vector<CheckResult> out;
  for (std::int64_t q : {2, 3, 4, 5}) {
    const Ring ring = Ring::galois_field(q);
    bool ok = true;
    std::string detail;
    for (std::size_t n = 1; n <= 10; ++n) {
      const OmegaCensus c = omega_census(ring, n);
      const bool row_ok = c.omega_size == j_count(q, n) && j_count(q, n) == lucas_like(q, n) &&
                          c.cycles.size() == z_count(q, n);
      if (!row_ok) {
        ok = false;
        detail += " n=" + std::to_string(n) + " got " + std::to_string(c.omega_size) + "/" +
                  std::to_string(c.cycles.size());
      }
    }
    if (q == 4) {
      const OmegaCensus c = omega_census(ring, 3);
      if (c.omega_size != 10 || c.cycles.size() != 3) ok = false;
      detail += " n=3: j=" + std::to_string(c.omega_size) + " Z=" + std::to_string(c.cycles.size());
    }
    out.push_back(check("q=" + std::to_string(q) + " n<=10", ok, (ok ? "all rows match" : "mismatch") + detail));
  }
  return out;
}

bool same_up_to_rotation(const std::vector<DyadicRational>& a, const std::vector<std::string>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t r = 0; r < a.size(); ++r) {
    bool eq = true;
    for (std::size_t i = 0; i < a.size() && eq; ++i) eq = a[(r + i) % a.size()] == DyadicRational::parse(b[i]);
    if (eq) return true;
  }
  return false;
}

std::vector<CheckResult> z2_cycles_suite(Rng&) {
  std::vector<CheckResult> out;
  const std::vector<std::vector<std::vector<std::string>>> table{
      {{"0"}},
      {{"-1", "-2"}},
      {{"1", "4", "2"}},
      {{"1/5", "8/5", "4/5", "2/5"}},
      {{"-10", "-5", "-14", "-7", "-20"}, {"8/13", "4/13", "2/13", "1/13", "16/13"}},
  };
  bool ok = true;
  std::string counts;
  for (std::size_t n = 1; n <= 5; ++n) {
    const auto cycles = enumerate_z2_cycles(n);
    counts += (n > 1 ? "," : "") + std::to_string(cycles.size());
    const auto& want = table[n - 1];
    if (cycles.size() != want.size()) ok = false;
    for (const auto& w : want) {
      if (std::none_of(cycles.begin(), cycles.end(), [&](const auto& c) { return same_up_to_rotation(c, w); })) {
        ok = false;
      }
    }
  }
  out.push_back(check("listed cycles n=1..5", ok, "counts " + counts));

  ok = true;
  std::string detail;
  for (std::size_t n = 1; n <= 18; ++n) {
    const auto got = enumerate_z2_cycles(n).size();
    if (got != z2_cycle_count(n)) {
      ok = false;
      detail += " n=" + std::to_string(n);
    }
  }
  out.push_back(check("cycle count formula n<=18", ok, ok ? "all match" : "mismatch at" + detail));

  ok = true;
  detail.clear();
  for (std::size_t n = 1; n <= 18; ++n) {
    if (count_primitive_necklaces(n) != condensed_cycle_count(n)) {
      ok = false;
      detail += " n=" + std::to_string(n);
    }
    if (n <= 12 && enumerate_z2_condensed_cycles(n).size() != condensed_cycle_count(n)) {
      ok = false;
      detail += " realized n=" + std::to_string(n);
    }
  }
  out.push_back(check("condensed count vs necklaces n<=18", ok, ok ? "all match" : "mismatch at" + detail));
  return out;
}

std::vector<CheckResult> round_trip_suite(Rng&) {
  std::vector<CheckResult> out;
  for (std::int64_t q : {2, 3, 4}) {
    const Ring ring = Ring::galois_field(q);
    std::uint64_t total = 0, bad = 0;
    for (std::size_t n = 1; n <= 8; ++n) {
      for (const auto& v : enumerate_cyclically_zero_dense(q, n)) {
        ++total;
        const RationalSeries f = periodic_from_cyclic_parity(ring, v);
        RationalSeries g = f;
        for (std::size_t i = 0; i < n; ++i) g = series_T(g);
        if (!(g == f) || parity_vector(f, n, MapKind::full) != v) ++bad;
      }
    }
    out.push_back(check("series q=" + std::to_string(q) + " n<=8", bad == 0,
                        std::to_string(total) + " vectors, " + std::to_string(bad) + " failures"));
  }

  std::uint64_t total = 0, bad = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
      ParityVector v(n);
      for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>((m >> i) & 1U);
      ++total;
      const DyadicRational f = periodic_from_parity_z2(v);
      DyadicRational g = f;
      for (std::size_t i = 0; i < n; ++i) g = dyadic_T_condensed(g);
      if (!(g == f) || z2_parity_vector(f, n, MapKind::condensed) != v) ++bad;
      if (is_cyclically_zero_dense(v)) {
        ++total;
        const DyadicRational h = periodic_from_cyclic_parity_z2(v);
        DyadicRational k = h;
        for (std::size_t i = 0; i < n; ++i) k = dyadic_T(k);
        if (!(k == h) || z2_parity_vector(h, n, MapKind::full) != v) ++bad;
      }
    }
  }
  out.push_back(check("Z2 bit vectors n<=12", bad == 0,
                      std::to_string(total) + " constructions, " + std::to_string(bad) + " failures"));
  return out;
}

std::vector<CheckResult> asymptotics_suite(Rng&) {
  std::vector<CheckResult> out;
  for (std::int64_t q : {2, 5}) {
    double worst = 0.0;
    for (std::uint64_t n = 40; n <= 60; ++n) worst = std::max(worst, std::abs(asymptotic_ratio(q, n) - 1.0));
    out.push_back(check("q=" + std::to_string(q) + " n=40..60 within 0.01", worst <= 0.01,
                        "max |ratio-1| = " + str(worst)));
  }
  const double d = std::abs(asymptotic_ratio(2, 60) - 1.0);
  out.push_back(check("q=2 n=60 within 0.001", d <= 0.001, "|ratio-1| = " + str(d)));
  return out;
}

std::vector<CheckResult> infinite_ring_suite(Rng& rng) {
  std::vector<CheckResult> out;
  const Ring ring = Ring::poly_over_prime(2);
  const Poly f(ring, {ring.from_coeffs({1, 1}), ring.from_coeffs({0, 1})});
  const bool periodic = is_periodic(f);
  const std::uint64_t period = periodic ? exact_period(f) : 0;
  const mpz_class bound = period_divisor_bound(f);
  out.push_back(check("t x + (t+1) has period 4", periodic && period == 4 && bound == 4,
                      "period " + std::to_string(period) + ", bound " + bound.get_str()));

  std::uniform_int_distribution<std::int64_t> bit(0, 1);
  std::uniform_int_distribution<int> xdeg(0, 3), tdeg(0, 2);
  std::uint64_t reached = 0;
  for (int i = 0; i < 200; ++i) {
    const int d = xdeg(rng);
    std::vector<RingElem> c;
    for (int j = 0; j <= d; ++j) {
      FpCoeffs t(static_cast<std::size_t>(tdeg(rng)) + 1);
      for (auto& b : t) b = bit(rng);
      c.push_back(ring.from_coeffs(t));
    }
    if (orbit(Poly(ring, std::move(c))).found()) ++reached;
  }
  out.push_back(check("200 random polynomials reach cycles", reached == 200,
                      std::to_string(reached) + "/200 reached a cycle"));
  return out;
}

struct Suite {
  std::string name;
  std::function<std::vector<CheckResult>(Rng&)> run;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {"fq-census", fq_census_suite},     {"period-law", period_law_suite},
      {"criterion", criterion_suite},     {"preperiod", preperiod_suite},
      {"kummer", kummer_suite},           {"series-census", series_census_suite},
      {"z2-cycles", z2_cycles_suite},     {"round-trip", round_trip_suite},
      {"asymptotics", asymptotics_suite}, {"infinite-ring", infinite_ring_suite},
  };
  return all;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& s : suites()) n.push_back(s.name);
    return n;
  }();
  return names;
}

SuiteReport run_suite(const std::string& name, std::uint64_t seed) {
  auto it = std::find_if(suites().begin(), suites().end(), [&](const Suite& s) { return s.name == name; });
  if (it == suites().end()) fail(Errc::invalid_argument, "unknown suite '" + name + "'");
  SuiteReport report;
  report.suite = name;
  Rng rng(seed);
  const auto start = std::chrono::steady_clock::now();
  try {
    report.checks = it->run(rng);
  } catch (const Error& e) {
    report.checks.push_back(check("suite raised an error", false, std::string(to_string(e.code())) + ": " + e.what()));
  }
  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace ringcollatz
