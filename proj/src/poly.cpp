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

#include "ringcollatz/poly.hpp"

#include <algorithm>

#include "ringcollatz/cycle.hpp"
#include "ringcollatz/error.hpp"
#include "ringcollatz/valuation.hpp"

namespace ringcollatz {

namespace {

void trim(const Ring& ring, std::vector<RingElem>& c) {
  while (!c.empty() && ring.is_zero(c.back())) c.pop_back();
}

int max_t_degree(const Poly& f) {
  int d = -1;
  for (const auto& c : f.coeffs()) d = std::max(d, f.ring().t_degree(c));
  return d;
}

constexpr std::uint64_t kBudgetClamp = std::uint64_t{1} << 40;

std::uint64_t clamp_to_u64(const mpz_class& v, std::uint64_t limit) {
  if (v > mpz_class(static_cast<unsigned long>(limit))) return limit;
  return static_cast<std::uint64_t>(v.get_ui());
}

}  // namespace

Poly::Poly(Ring ring, std::vector<RingElem> coeffs) : ring_(std::move(ring)), c_(std::move(coeffs)) {
  trim(ring_, c_);
}

Poly Poly::constant(const Ring& ring, const RingElem& c) { return Poly(ring, {c}); }

Poly Poly::from_ints(const Ring& ring, const std::vector<std::int64_t>& c) {
  std::vector<RingElem> e;
  e.reserve(c.size());
  for (auto v : c) e.push_back(ring.from_int(v));
  return Poly(ring, std::move(e));
}

Poly Poly::monomial(const Ring& ring, std::size_t k) {
  std::vector<RingElem> e(k + 1, ring.zero());
  e[k] = ring.one();
  return Poly(ring, std::move(e));
}

std::strong_ordering operator<=>(const Poly& a, const Poly& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() <=> b.c_.size();
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (auto c = a.c_[i] <=> b.c_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Poly operator+(const Poly& a, const Poly& b) {
  const Ring& r = a.ring();
  std::vector<RingElem> c(std::max(a.coeffs().size(), b.coeffs().size()), r.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = r.add(a.coeff(i), b.coeff(i));
  return Poly(r, std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
  const Ring& r = a.ring();
  std::vector<RingElem> c(std::max(a.coeffs().size(), b.coeffs().size()), r.zero());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = r.sub(a.coeff(i), b.coeff(i));
  return Poly(r, std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
  const Ring& r = a.ring();
  if (a.is_zero() || b.is_zero()) return Poly(r);
  std::vector<RingElem> c(a.coeffs().size() + b.coeffs().size() - 1, r.zero());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (r.is_zero(a.coeffs()[i])) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      c[i + j] = r.add(c[i + j], r.mul(a.coeffs()[i], b.coeffs()[j]));
    }
  }
  return Poly(r, std::move(c));
}

Poly scale(const RingElem& k, const Poly& f) {
  const Ring& r = f.ring();
  std::vector<RingElem> c;
  c.reserve(f.coeffs().size());
  for (const auto& a : f.coeffs()) c.push_back(r.mul(k, a));
  return Poly(r, std::move(c));
}

Poly shift_up(const Poly& f, std::size_t k) {
  if (f.is_zero()) return f;
  std::vector<RingElem> c(k, f.ring().zero());
  c.insert(c.end(), f.coeffs().begin(), f.coeffs().end());
  return Poly(f.ring(), std::move(c));
}

Poly divide_by_x(const Poly& f) {
  if (f.is_zero()) return f;
  if (!f.ring().is_zero(f.coeffs().front())) {
    fail(Errc::invalid_argument, "divide_by_x: constant term is nonzero");
  }
  return Poly(f.ring(), std::vector<RingElem>(f.coeffs().begin() + 1, f.coeffs().end()));
}

Poly x_plus_one_pow(const Ring& ring, std::size_t s) {
  // Pascal row s, built in place.
  std::vector<RingElem> row(s + 1, ring.zero());
  row[0] = ring.one();
  for (std::size_t n = 1; n <= s; ++n) {
    for (std::size_t j = n; j >= 1; --j) row[j] = ring.add(row[j], row[j - 1]);
  }
  return Poly(ring, std::move(row));
}

Poly collatz_step(const Poly& f) {
  const Ring& r = f.ring();
  if (!f.is_odd()) return f.is_zero() ? f : divide_by_x(f);
  // (x+1) f - f0: coefficient i >= 1 is b_i + b_{i-1}; the constant cancels.
  const auto& b = f.coeffs();
  std::vector<RingElem> c(b.size() + 1, r.zero());
  for (std::size_t i = 1; i < b.size(); ++i) c[i] = r.add(b[i], b[i - 1]);
  c[b.size()] = b.back();
  return Poly(r, std::move(c));
}

Poly pi_step(const Poly& f) {
  const Ring& r = f.ring();
  const auto& b = f.coeffs();
  if (b.empty()) return f;
  std::vector<RingElem> c(b.size(), r.zero());
  for (std::size_t i = 0; i + 1 < b.size(); ++i) c[i] = r.add(b[i], b[i + 1]);
  c.back() = b.back();
  return Poly(r, std::move(c));
}

Poly shift_map(const Poly& f) {
  if (f.is_zero()) return f;
  return Poly(f.ring(), std::vector<RingElem>(f.coeffs().begin() + 1, f.coeffs().end()));
}

std::uint64_t default_orbit_budget(const Poly& f) {
  if (f.ring().characteristic() == 0) return 1000;
  const auto cf = characteristic_factorization(f.ring());
  const std::uint64_t d = static_cast<std::uint64_t>(std::max(f.degree(), 0));
  const mpz_class b = 2 * threshold_constant(cf, d + 1) * mpz_class(static_cast<unsigned long>(d + 2));
  return clamp_to_u64(b, kBudgetClamp);
}

OrbitReport orbit(const Poly& f, std::optional<std::uint64_t> budget, bool keep_trace) {
  OrbitReport report;
  report.budget = budget.value_or(default_orbit_budget(f));
  if (report.budget < 1) fail(Errc::invalid_argument, "orbit: max_steps must be >= 1");

  const bool check_t = f.ring().kind() == RingKind::poly_over_prime;
  auto step = [check_t](const Poly& g) {
    Poly h = collatz_step(g);
    if (check_t && max_t_degree(h) > max_t_degree(g)) {
      fail(Errc::internal, "T enlarged the t-degree of a coefficient");
    }
    return h;
  };

  auto search = brent(f, step, report.budget);
  report.steps_taken = search.steps;
  if (!search.found) return report;
  report.preperiod = search.preperiod;
  report.cycle = std::move(search.cycle);
  if (keep_trace) {
    std::vector<Poly> trace;
    const std::uint64_t len = report.preperiod + report.cycle.size();
    trace.reserve(len);
    Poly g = f;
    for (std::uint64_t i = 0; i < len; ++i) {
      trace.push_back(g);
      g = collatz_step(g);
    }
    report.trace = std::move(trace);
  }
  return report;
}

namespace {

std::uint64_t checked_threshold(const Poly& f, std::uint64_t n, std::uint64_t cap) {
  const auto cf = characteristic_factorization(f.ring());
  const mpz_class k = threshold_constant(cf, n);
  if (k > mpz_class(static_cast<unsigned long>(cap))) {
    fail(Errc::cap_exceeded, "threshold constant K(" + std::to_string(n) + ") = " + k.get_str() +
                                 " exceeds cap " + std::to_string(cap));
  }
  return k.get_ui();
}

void require_positive_char(const Poly& f) {
  if (f.ring().characteristic() == 0) {
    fail(Errc::char_zero, "char-zero ring: use char_zero_classify");
  }
}

// Returns the first i in [1, limit] with T^i(f) = f, or 0.
std::uint64_t first_return(const Poly& f, std::uint64_t limit) {
  Poly g = collatz_step(f);
  for (std::uint64_t i = 1; i <= limit; ++i) {
    if (g == f) return i;
    g = collatz_step(g);
  }
  return 0;
}

}  // namespace

bool is_periodic(const Poly& f, std::uint64_t threshold_cap) {
  require_positive_char(f);
  if (f.is_zero() || f.degree() == 0) return true;
  const auto n = static_cast<std::uint64_t>(f.degree());
  if (!f.is_odd()) {
    const std::uint64_t k = checked_threshold(f, n, threshold_cap);
    return first_return(f, 2 * k) != 0;
  }

  // For l = 0..K: sum_{j<=min(l,n)} C(l, j) b_j must be nonzero. Pascal rows are
  // streamed modulo the characteristic and truncated at column n.
  const std::uint64_t k = checked_threshold(f, n, threshold_cap);
  const Ring& r = f.ring();
  const std::int64_t modulus = r.characteristic();
  std::vector<std::int64_t> row(n + 1, 0);
  row[0] = 1 % modulus;
  for (std::uint64_t l = 0; l <= k; ++l) {
    if (l > 0) {
      for (std::uint64_t j = std::min<std::uint64_t>(l, n); j >= 1; --j) {
        row[j] += row[j - 1];
        if (row[j] >= modulus) row[j] -= modulus;
      }
    }
    RingElem sum = r.zero();
    const std::uint64_t top = std::min<std::uint64_t>(l, n);
    for (std::uint64_t j = 0; j <= top; ++j) {
      if (row[j] != 0) sum = r.add(sum, r.scale(row[j], f.coeffs()[j]));
    }
    if (r.is_zero(sum)) return false;
  }
  return true;
}

mpz_class period_divisor_bound(const Poly& f) {
  require_positive_char(f);
  if (!f.is_odd()) fail(Errc::invalid_argument, "period bound needs an odd polynomial");
  if (f.degree() < 1) fail(Errc::invalid_argument, "period bound needs degree >= 1");
  return 2 * threshold_constant(characteristic_factorization(f.ring()),
                                static_cast<std::uint64_t>(f.degree()));
}

std::uint64_t exact_period(const Poly& f, std::uint64_t threshold_cap) {
  require_positive_char(f);
  if (!is_periodic(f, threshold_cap)) fail(Errc::not_periodic, "exact_period: f is not periodic");
  if (f.is_zero()) return 1;
  if (f.degree() == 0) return 2;
  const auto n = static_cast<std::uint64_t>(f.degree());
  const std::uint64_t k = checked_threshold(f, n, threshold_cap);
  const std::uint64_t period = first_return(f, 2 * k);
  if (period == 0) fail(Errc::internal, "periodic polynomial did not return within 2K(deg f)");
  return period;
}

CharZeroClass char_zero_classify(const Poly& f) {
  if (f.ring().characteristic() != 0) {
    fail(Errc::positive_char, "char_zero_classify needs a characteristic-zero ring");
  }
  if (f.is_zero()) return CharZeroClass::on_zero_cycle;
  if (f.degree() == 0) return CharZeroClass::on_constant_cycle;
  if (f.degree() == 1 && f.ring().is_zero(f.coeffs()[0])) return CharZeroClass::on_constant_cycle;
  return CharZeroClass::not_periodic;
}

bool preperiod_bound_check(const Poly& f) {
  if (!f.ring().is_field()) fail(Errc::invalid_argument, "preperiod bound needs a finite field");
  if (f.is_zero()) fail(Errc::invalid_argument, "preperiod bound needs f != 0");
  const auto p = static_cast<std::uint64_t>(f.ring().characteristic());
  const auto d = static_cast<std::uint64_t>(f.degree());
  const std::uint64_t steps = p * d * (d + 1) - d;
  Poly g = f;
  for (std::uint64_t i = 0; i < steps; ++i) g = collatz_step(g);
  return is_periodic(g);
}

}  // namespace ringcollatz
