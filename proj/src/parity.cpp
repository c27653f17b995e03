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

#include "ringcollatz/parity.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "ringcollatz/error.hpp"

namespace ringcollatz {

namespace {

void require_alphabet(std::int64_t q) {
  if (q < 2) fail(Errc::invalid_argument, "alphabet size q must be >= 2");
}

void require_nonempty(const ParityVector& v) {
  if (v.empty()) fail(Errc::invalid_argument, "parity vector must be nonempty");
}

// Depth-first generation in lexicographic order. `cyclic` adds the wrap rule.
void generate(std::int64_t q, std::size_t n, bool cyclic, std::uint64_t budget, ParityVector& cur,
              std::vector<ParityVector>& out) {
  const std::size_t pos = cur.size();
  if (pos == n) {
    if (out.size() >= budget) fail(Errc::budget_exceeded, "vector enumeration exceeds the work budget");
    out.push_back(cur);
    return;
  }
  const bool prev_nonzero = pos > 0 && cur[pos - 1] != 0;
  const bool wrap_blocked = cyclic && pos == n - 1 && n >= 2 && cur[0] != 0;
  cur.push_back(0);
  generate(q, n, cyclic, budget, cur, out);
  cur.pop_back();
  if (prev_nonzero || wrap_blocked || (cyclic && n == 1)) return;
  for (std::int64_t s = 1; s < q; ++s) {
    cur.push_back(s);
    generate(q, n, cyclic, budget, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool is_zero_dense(const ParityVector& v) {
  require_nonempty(v);
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] != 0 && v[i + 1] != 0) return false;
  }
  return true;
}

bool is_cyclically_zero_dense(const ParityVector& v) {
  return is_zero_dense(v) && (v.back() == 0 || v.front() == 0);
}

std::vector<ParityVector> enumerate_zero_dense(std::int64_t q, std::size_t n, std::uint64_t work_budget) {
  require_alphabet(q);
  if (n < 1) fail(Errc::invalid_argument, "vector length must be >= 1");
  std::vector<ParityVector> out;
  ParityVector cur;
  generate(q, n, false, work_budget, cur, out);
  return out;
}

std::vector<ParityVector> enumerate_cyclically_zero_dense(std::int64_t q, std::size_t n,
                                                          std::uint64_t work_budget) {
  require_alphabet(q);
  if (n < 1) fail(Errc::invalid_argument, "vector length must be >= 1");
  std::vector<ParityVector> out;
  ParityVector cur;
  generate(q, n, true, work_budget, cur, out);
  return out;
}

ParityVector expand(const ParityVector& v) {
  ParityVector out;
  out.reserve(2 * v.size());
  for (auto s : v) {
    out.push_back(s);
    if (s != 0) out.push_back(0);
  }
  return out;
}

ParityVector condense(const ParityVector& v) {
  require_nonempty(v);
  if (!is_zero_dense(v)) fail(Errc::invalid_argument, "condense: vector is not zero dense");
  if (v.back() != 0) fail(Errc::invalid_argument, "condense: vector ends in a nonzero entry");
  ParityVector out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(v[i]);
    if (v[i] != 0) ++i;  // skip the forced 0
  }
  return out;
}

namespace {
mpz_class recurrence(std::int64_t q, std::uint64_t n, mpz_class x0, mpz_class x1) {
  require_alphabet(q);
  if (n == 0) return x0;
  const mpz_class c(static_cast<long>(q - 1));
  for (std::uint64_t i = 1; i < n; ++i) {
    mpz_class x2 = x1 + c * x0;
    x0 = std::move(x1);
    x1 = std::move(x2);
  }
  return x1;
}
}  // namespace

mpz_class lucas_like(std::int64_t q, std::uint64_t n) { return recurrence(q, n, 2, 1); }

mpz_class fib_like(std::int64_t q, std::uint64_t m) { return recurrence(q, m, 0, 1); }

mpz_class e_count(std::int64_t q, std::uint64_t n) { return fib_like(q, n + 2); }

mpz_class j_count(std::int64_t q, std::uint64_t n) {
  require_alphabet(q);
  if (n == 0) fail(Errc::invalid_argument, "j_n needs n >= 1");
  if (n == 1) return 1;
  if (n == 2) return mpz_class(static_cast<long>(2 * q - 1));
  return e_count(q, n - 1) + mpz_class(static_cast<long>(q - 1)) * e_count(q, n - 3);
}

mpz_class i_count(std::int64_t q, std::uint64_t n) {
  if (n == 0) fail(Errc::invalid_argument, "i_n needs n >= 1");
  mpz_class s = 0;
  for (auto d : divisors(n)) {
    const int mu = mobius(d);
    if (mu != 0) s += mu * j_count(q, n / d);
  }
  return s;
}

mpz_class z_count(std::int64_t q, std::uint64_t n) {
  const mpz_class i = i_count(q, n);
  const mpz_class nn(static_cast<unsigned long>(n));
  if (!mpz_divisible_p(i.get_mpz_t(), nn.get_mpz_t())) {
    fail(Errc::internal, "i_n is not divisible by n");
  }
  return i / nn;
}

int mobius(std::uint64_t n) {
  if (n == 0) fail(Errc::invalid_argument, "mobius needs n >= 1");
  int mu = 1;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> lo, hi;
  for (std::uint64_t d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

ParityVector min_rotation(const ParityVector& v) {
  ParityVector best = v;
  ParityVector r = v;
  for (std::size_t i = 1; i < v.size(); ++i) {
    std::rotate(r.begin(), r.begin() + 1, r.end());
    if (r < best) best = r;
  }
  return best;
}

std::size_t primitive_period(const ParityVector& v) {
  require_nonempty(v);
  const std::size_t n = v.size();
  for (auto d : divisors(n)) {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i) ok = v[i] == v[(i + d) % n];
    if (ok) return static_cast<std::size_t>(d);
  }
  return n;
}

std::vector<RotationClass> rotation_orbits(const std::vector<ParityVector>& vectors) {
  std::map<ParityVector, RotationClass> classes;
  for (const auto& v : vectors) {
    require_nonempty(v);
    if (v.size() != vectors.front().size()) fail(Errc::invalid_argument, "rotation_orbits: mixed lengths");
    ParityVector key = min_rotation(v);
    auto& c = classes[key];
    if (c.members.empty()) {
      c.representative = key;
      c.period = primitive_period(key);
    }
    c.members.push_back(v);
  }
  std::vector<RotationClass> out;
  out.reserve(classes.size());
  for (auto& [k, c] : classes) out.push_back(std::move(c));
  return out;
}

double asymptotic_ratio(std::int64_t q, std::uint64_t n) {
  require_alphabet(q);
  if (n < 2) fail(Errc::invalid_argument, "asymptotic_ratio needs n >= 2");
  constexpr mp_bitcnt_t kPrecision = 256;
  mpf_class root(static_cast<double>(4 * q - 3), kPrecision);
  mpf_sqrt(root.get_mpf_t(), root.get_mpf_t());
  mpf_class alpha(0, kPrecision);
  alpha = (1 + root) / 2;
  mpf_class alpha_n(0, kPrecision);
  mpf_pow_ui(alpha_n.get_mpf_t(), alpha.get_mpf_t(), static_cast<unsigned long>(n));
  mpf_class num(0, kPrecision);
  num = mpf_class(i_count(q, n), kPrecision);
  mpf_class ratio(0, kPrecision);
  ratio = num / alpha_n;
  return ratio.get_d();
}

CountLedger count_ledger(std::int64_t q, std::uint64_t n_min, std::uint64_t n_max) {
  if (n_min < 1 || n_max < n_min) fail(Errc::invalid_argument, "ledger range must satisfy 1 <= lo <= hi");
  CountLedger ledger{q, {}};
  for (std::uint64_t n = n_min; n <= n_max; ++n) {
    ledger.rows.push_back({n, e_count(q, n), j_count(q, n), i_count(q, n), z_count(q, n)});
  }
  return ledger;
}

std::string to_csv(const CountLedger& ledger) {
  std::ostringstream os;
  os << "n,e,j,i,Z\n";
  for (const auto& r : ledger.rows) {
    os << r.n << ',' << r.e.get_str() << ',' << r.j.get_str() << ',' << r.i.get_str() << ','
       << r.z.get_str() << '\n';
  }
  return os.str();
}

}  // namespace ringcollatz
