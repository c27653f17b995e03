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

#include "ringcollatz/series.hpp"

#include <algorithm>
#include <map>

#include "ringcollatz/cycle.hpp"
#include "ringcollatz/error.hpp"

namespace ringcollatz {

RationalSeries::RationalSeries(Poly u, Poly v) : u_(std::move(u)), v_(std::move(v)) {
  if (!(u_.ring() == v_.ring())) fail(Errc::invalid_argument, "series numerator and denominator rings differ");
}

RationalSeries::RationalSeries(Poly u) : u_(u), v_(Poly(u.ring())) {}

Poly RationalSeries::denominator() const {
  return Poly::constant(ring(), ring().one()) + shift_up(v_, 1);
}

std::vector<RingElem> RationalSeries::truncate(std::size_t terms) const {
  const Ring& r = ring();
  const Poly d = denominator();
  // g = d^(-1): g_0 = 1, g_k = -sum_{i=1..k} d_i g_{k-i}.
  std::vector<RingElem> g(terms, r.zero());
  if (terms > 0) g[0] = r.one();
  for (std::size_t k = 1; k < terms; ++k) {
    RingElem s = r.zero();
    for (std::size_t i = 1; i <= k && i < d.coeffs().size(); ++i) s = r.add(s, r.mul(d.coeffs()[i], g[k - i]));
    g[k] = r.neg(s);
  }
  std::vector<RingElem> out(terms, r.zero());
  for (std::size_t i = 0; i < u_.coeffs().size() && i < terms; ++i) {
    for (std::size_t k = 0; i + k < terms; ++k) out[i + k] = r.add(out[i + k], r.mul(u_.coeffs()[i], g[k]));
  }
  return out;
}

bool operator==(const RationalSeries& a, const RationalSeries& b) {
  if (a.v_ == b.v_) return a.u_ == b.u_;
  return a.u_ * b.denominator() == b.u_ * a.denominator();
}

namespace {

// (x+1) u - u(0) (1 + x v) for odd f; the result has zero constant term.
Poly odd_numerator(const RationalSeries& f) {
  const Poly& u = f.u();
  const Poly x_plus_one = Poly::from_ints(f.ring(), {1, 1});
  return x_plus_one * u - scale(u.constant_term(), f.denominator());
}

}  // namespace

RationalSeries series_T(const RationalSeries& f) {
  if (f.is_odd()) return RationalSeries(odd_numerator(f), f.v());
  return RationalSeries(divide_by_x(f.u()), f.v());
}

RationalSeries series_T_condensed(const RationalSeries& f) {
  if (f.is_odd()) return RationalSeries(divide_by_x(odd_numerator(f)), f.v());
  return RationalSeries(divide_by_x(f.u()), f.v());
}

ParityVector parity_vector(const RationalSeries& f, std::size_t n, MapKind which) {
  if (n < 1) fail(Errc::invalid_argument, "parity_vector needs n >= 1");
  const Ring& r = f.ring();
  ParityVector out;
  out.reserve(n);
  RationalSeries g = f;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(r.code(g.constant_term()));
    if (i + 1 < n) g = which == MapKind::full ? series_T(g) : series_T_condensed(g);
  }
  return out;
}

RationalSeries periodic_from_parity(const Ring& ring, const ParityVector& v) {
  if (v.empty()) fail(Errc::invalid_argument, "parity vector must be nonempty");
  const std::size_t n = v.size();
  // numerator = sum_j v_j x^j (x+1)^(s_j), s_j = #nonzero entries after j.
  Poly num(ring);
  std::size_t s = 0;
  for (std::size_t j = n; j-- > 0;) {
    if (v[j] != 0) {
      num = num + shift_up(scale(ring.from_code(v[j]), x_plus_one_pow(ring, s)), j);
      ++s;
    }
  }
  // denominator (x+1)^s - x^n = 1 + x w.
  const Poly den = x_plus_one_pow(ring, s) - Poly::monomial(ring, n);
  const Poly w = divide_by_x(den - Poly::constant(ring, ring.one()));
  return RationalSeries(std::move(num), w);
}

RationalSeries periodic_from_cyclic_parity(const Ring& ring, const ParityVector& v) {
  if (!is_cyclically_zero_dense(v)) {
    fail(Errc::invalid_argument, "vector is not cyclically zero dense");
  }
  if (v.size() == 1) return RationalSeries(Poly(ring));
  if (v.back() == 0) return periodic_from_parity(ring, condense(v));
  // Ends in a nonzero entry, so v[n-2] = 0: build the point one step earlier.
  ParityVector rotated(v.size());
  std::rotate_copy(v.begin(), v.end() - 1, v.end(), rotated.begin());
  return series_T(periodic_from_parity(ring, condense(rotated)));
}

SeriesOrbitReport series_orbit(const RationalSeries& f, std::uint64_t budget) {
  if (!f.ring().is_finite()) fail(Errc::invalid_argument, "series orbits need a finite ring");
  // Inside one orbit v never changes, so comparing numerators is exact.
  auto same_u = [](const RationalSeries& a, const RationalSeries& b) { return a.u() == b.u(); };
  auto search = brent(f, [](const RationalSeries& g) { return series_T(g); }, budget, same_u);
  if (!search.found) fail(Errc::budget_exceeded, "series orbit exceeded its budget");
  SeriesOrbitReport rep;
  rep.found = true;
  rep.preperiod = search.preperiod;
  rep.cycle = std::move(search.cycle);
  rep.steps_taken = search.steps;
  rep.parity_trace = parity_vector(f, static_cast<std::size_t>(rep.preperiod + rep.cycle.size()), MapKind::full);
  return rep;
}

OmegaCensus omega_census(const Ring& ring, std::size_t n, std::uint64_t work_budget) {
  if (!ring.is_finite()) fail(Errc::invalid_argument, "omega census needs a finite ring");
  if (n < 1) fail(Errc::invalid_argument, "omega census needs n >= 1");
  OmegaCensus census;
  if (n == 1) {
    census.omega_size = 1;
    census.cycles.push_back({RationalSeries(Poly(ring))});
    return census;
  }
  const std::int64_t q = *ring.cardinality();
  const auto vectors = enumerate_cyclically_zero_dense(q, n, work_budget);
  // Cycle key: least length-n parity window among its members.
  std::map<ParityVector, std::vector<RationalSeries>> cycles;
  for (const auto& v : vectors) {
    const RationalSeries f = periodic_from_cyclic_parity(ring, v);
    std::vector<RationalSeries> orbit{f};
    ParityVector trace{ring.code(f.constant_term())};
    for (std::size_t i = 1; i < 2 * n; ++i) {
      const RationalSeries g = series_T(orbit.back());
      trace.push_back(ring.code(g.constant_term()));
      orbit.push_back(g);
    }
    if (!(orbit[n] == f)) fail(Errc::internal, "constructed series is not T^n-periodic");
    if (!std::equal(v.begin(), v.end(), trace.begin())) {
      fail(Errc::internal, "constructed series does not reproduce its parity vector");
    }
    ++census.omega_size;
    std::size_t period = n;
    for (std::size_t i = 1; i < n; ++i) {
      if (orbit[i] == f) {
        period = i;
        break;
      }
    }
    if (period != n) continue;
    std::size_t best = 0;
    for (std::size_t i = 1; i < n; ++i) {
      if (std::lexicographical_compare(trace.begin() + i, trace.begin() + i + n, trace.begin() + best,
                                       trace.begin() + best + n)) {
        best = i;
      }
    }
    ParityVector key(trace.begin() + best, trace.begin() + best + n);
    if (!cycles.contains(key)) {
      cycles.emplace(std::move(key), std::vector<RationalSeries>(orbit.begin() + best, orbit.begin() + best + n));
    }
  }
  for (auto& [k, c] : cycles) census.cycles.push_back(std::move(c));
  return census;
}

}  // namespace ringcollatz
