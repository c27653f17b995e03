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

#include "ringcollatz/dyadic.hpp"

#include <algorithm>
#include <set>

#include "ringcollatz/cycle.hpp"
#include "ringcollatz/error.hpp"

namespace ringcollatz {

DyadicRational::DyadicRational(const mpz_class& n) : q_(n) {}

DyadicRational::DyadicRational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) fail(Errc::invalid_argument, "zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
  if (mpz_even_p(q_.get_den_mpz_t())) fail(Errc::invalid_argument, "denominator is even: not a 2-adic integer");
}

DyadicRational::DyadicRational(const mpq_class& value) : q_(value) {
  q_.canonicalize();
  if (mpz_even_p(q_.get_den_mpz_t())) fail(Errc::invalid_argument, "denominator is even: not a 2-adic integer");
}

std::string DyadicRational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

DyadicRational DyadicRational::parse(const std::string& text) {
  auto to_int = [&](const std::string& s) {
    std::string t;
    for (char c : s) {
      if (c != ' ' && c != '\t') t.push_back(c);
    }
    mpz_class z;
    const std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (t.size() == start || !std::all_of(t.begin() + static_cast<std::ptrdiff_t>(start), t.end(),
                                          [](char c) { return c >= '0' && c <= '9'; })) {
      fail(Errc::parse_error, "bad rational: '" + text + "'");
    }
    z.set_str(t[0] == '+' ? t.substr(1) : t, 10);
    return z;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return DyadicRational(to_int(text));
  return DyadicRational(to_int(text.substr(0, slash)), to_int(text.substr(slash + 1)));
}

DyadicRational dyadic_T(const DyadicRational& f) {
  if (f.is_odd()) return DyadicRational(mpq_class(3 * f.value() + 1));
  return DyadicRational(mpq_class(f.value() / 2));
}

DyadicRational dyadic_T_condensed(const DyadicRational& f) {
  if (f.is_odd()) return DyadicRational(mpq_class((3 * f.value() + 1) / 2));
  return DyadicRational(mpq_class(f.value() / 2));
}

ParityVector z2_parity_vector(const DyadicRational& f, std::size_t n, MapKind which) {
  ParityVector out;
  out.reserve(n);
  DyadicRational g = f;
  for (std::size_t i = 0; i < n; ++i) {
    out.push_back(g.is_odd() ? 1 : 0);
    if (i + 1 < n) g = which == MapKind::full ? dyadic_T(g) : dyadic_T_condensed(g);
  }
  return out;
}

namespace {

void require_bits(const ParityVector& v) {
  if (v.empty()) fail(Errc::invalid_argument, "bit vector must be nonempty");
  for (auto b : v) {
    if (b != 0 && b != 1) fail(Errc::invalid_argument, "bit vector entries must be 0 or 1");
  }
}

mpz_class pow_ui(unsigned long base, std::size_t e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

}  // namespace

DyadicRational periodic_from_parity_z2(const ParityVector& bits) {
  require_bits(bits);
  const std::size_t n = bits.size();
  mpz_class num = 0;
  std::size_t s = 0;
  for (std::size_t j = n; j-- > 0;) {
    if (bits[j] != 0) {
      num += pow_ui(2, j) * pow_ui(3, s);
      ++s;
    }
  }
  return DyadicRational(num, pow_ui(2, n) - pow_ui(3, s));
}

DyadicRational periodic_from_cyclic_parity_z2(const ParityVector& bits) {
  require_bits(bits);
  if (!is_cyclically_zero_dense(bits)) {
    fail(Errc::invalid_argument, "bit vector is not cyclically zero dense");
  }
  if (bits.size() == 1) return DyadicRational();
  if (bits.back() == 0) return periodic_from_parity_z2(condense(bits));
  ParityVector rotated(bits.size());
  std::rotate_copy(bits.begin(), bits.end() - 1, bits.end(), rotated.begin());
  return dyadic_T(periodic_from_parity_z2(condense(rotated)));
}

namespace {

template <class Construct, class Step>
std::vector<std::vector<DyadicRational>> cycles_from_classes(const std::vector<ParityVector>& vectors,
                                                             std::size_t n, Construct construct, Step step) {
  std::vector<std::vector<DyadicRational>> out;
  for (const auto& v : vectors) {
    if (primitive_period(v) != n || min_rotation(v) != v) continue;
    std::vector<DyadicRational> cycle{construct(v)};
    for (std::size_t i = 1; i < n; ++i) cycle.push_back(step(cycle.back()));
    if (!(step(cycle.back()) == cycle.front())) fail(Errc::internal, "constructed point is not periodic");
    out.push_back(std::move(cycle));
  }
  return out;
}

std::vector<ParityVector> all_bit_vectors(std::size_t n, std::uint64_t work_budget) {
  if (n >= 63 || (std::uint64_t{1} << n) > work_budget) {
    fail(Errc::budget_exceeded, "2^n bit vectors exceed the work budget");
  }
  std::vector<ParityVector> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
    ParityVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::int64_t>((m >> (n - 1 - i)) & 1U);
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<std::vector<DyadicRational>> enumerate_z2_cycles(std::size_t n, std::uint64_t work_budget) {
  if (n < 1) fail(Errc::invalid_argument, "cycle length must be >= 1");
  return cycles_from_classes(enumerate_cyclically_zero_dense(2, n, work_budget), n,
                             periodic_from_cyclic_parity_z2, dyadic_T);
}

std::vector<std::vector<DyadicRational>> enumerate_z2_condensed_cycles(std::size_t n, std::uint64_t work_budget) {
  if (n < 1) fail(Errc::invalid_argument, "cycle length must be >= 1");
  return cycles_from_classes(all_bit_vectors(n, work_budget), n, periodic_from_parity_z2, dyadic_T_condensed);
}

mpz_class z2_cycle_count(std::uint64_t n) { return z_count(2, n); }

mpz_class condensed_cycle_count(std::uint64_t n) {
  if (n < 1) fail(Errc::invalid_argument, "I(n) needs n >= 1");
  mpz_class sum = 0;
  for (auto d : divisors(n)) {
    const int mu = mobius(d);
    if (mu != 0) sum += mu * pow_ui(2, n / d);
  }
  if (sum % static_cast<unsigned long>(n) != 0) fail(Errc::internal, "I(n) sum is not divisible by n");
  return sum / static_cast<unsigned long>(n);
}

std::uint64_t count_primitive_necklaces(std::size_t n, std::uint64_t work_budget) {
  if (n < 1) fail(Errc::invalid_argument, "necklace length must be >= 1");
  // Each primitive necklace has exactly n distinct rotations.
  std::uint64_t primitive = 0;
  for (const auto& v : all_bit_vectors(n, work_budget)) {
    if (primitive_period(v) == n) ++primitive;
  }
  return primitive / n;
}

std::vector<int> dyadic_digits(const DyadicRational& f, std::size_t m) {
  std::vector<int> out(m, 0);
  if (m == 0) return out;
  const mpz_class mod = pow_ui(2, m);
  mpz_class inv;
  if (mpz_invert(inv.get_mpz_t(), f.den().get_mpz_t(), mod.get_mpz_t()) == 0) {
    fail(Errc::internal, "odd denominator is not invertible mod 2^m");
  }
  mpz_class r = f.num() * inv;
  mpz_fdiv_r(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
  for (std::size_t i = 0; i < m; ++i) out[i] = mpz_tstbit(r.get_mpz_t(), i);
  return out;
}

DyadicOrbitReport dyadic_orbit(const DyadicRational& f, std::uint64_t budget, MapKind which) {
  if (budget < 1) fail(Errc::invalid_argument, "orbit budget must be >= 1");
  DyadicOrbitReport rep;
  rep.budget = budget;
  auto step = [which](const DyadicRational& g) {
    return which == MapKind::full ? dyadic_T(g) : dyadic_T_condensed(g);
  };
  auto search = brent(f, step, budget);
  rep.steps_taken = search.steps;
  if (!search.found) return rep;
  rep.found = true;
  rep.preperiod = search.preperiod;
  rep.cycle = std::move(search.cycle);
  return rep;
}

}  // namespace ringcollatz
