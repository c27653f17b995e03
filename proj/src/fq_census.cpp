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

#include "ringcollatz/fq_census.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "ringcollatz/error.hpp"

namespace ringcollatz {

namespace {

std::int64_t checked_size(std::int64_t p, int k, std::int64_t cap) {
  if (k < 1) fail(Errc::invalid_argument, "matrix size needs k >= 1");
  std::int64_t n = 1;
  for (int i = 0; i < k; ++i) {
    if (n > cap / p) fail(Errc::cap_exceeded, "p^k exceeds the matrix size cap " + std::to_string(cap));
    n *= p;
  }
  if (n > cap) fail(Errc::cap_exceeded, "p^k exceeds the matrix size cap " + std::to_string(cap));
  return n;
}

// base^exp if it does not exceed limit, otherwise limit + 1.
std::uint64_t bounded_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t limit) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && r > limit / base) return limit + 1;
    r *= base;
  }
  return r;
}

}  // namespace

std::int64_t binomial_mod_prime(std::uint64_t n, std::uint64_t m, std::int64_t p) {
  const auto up = static_cast<std::uint64_t>(p);
  std::int64_t result = 1;
  while (n > 0 || m > 0) {
    const std::uint64_t nd = n % up;
    const std::uint64_t md = m % up;
    if (md > nd) return 0;
    // C(nd, md) mod p with small digits: multiplicative formula with inverses.
    std::int64_t num = 1;
    std::int64_t den = 1;
    for (std::uint64_t i = 0; i < md; ++i) {
      num = static_cast<std::int64_t>((static_cast<__int128>(num) * ((nd - i) % up)) % p);
      den = static_cast<std::int64_t>((static_cast<__int128>(den) * ((i + 1) % up)) % p);
    }
    mpz_class inv;
    const mpz_class dz(static_cast<long>(den));
    const mpz_class pz(static_cast<long>(p));
    mpz_invert(inv.get_mpz_t(), dz.get_mpz_t(), pz.get_mpz_t());
    num = static_cast<std::int64_t>((static_cast<__int128>(num) * inv.get_si()) % p);
    result = static_cast<std::int64_t>((static_cast<__int128>(result) * num) % p);
    n /= up;
    m /= up;
  }
  return result;
}

TriangularPair build_matrices(std::int64_t p, int k, std::int64_t size_cap) {
  if (!is_prime(p)) fail(Errc::not_prime, std::to_string(p) + " is not prime");
  const std::int64_t n = checked_size(p, k, size_cap);
  TriangularPair m{p, k, IntMatrix::Zero(n, n), IntMatrix::Zero(n, n)};
  for (std::int64_t i = 0; i < n; ++i) {
    for (std::int64_t j = 0; j <= i; ++j) {
      const std::int64_t c = binomial_mod_prime(static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j), p);
      m.a(i, j) = c;
      m.b(i, j) = ((i + j) % 2 == 0 || c == 0) ? c : p - c;
    }
  }
  // Entries are < p and n <= cap, so the products stay far from overflow.
  const IntMatrix ba = (m.b * m.a).unaryExpr([p](std::int64_t v) { return v % p; });
  const IntMatrix ab = (m.a * m.b).unaryExpr([p](std::int64_t v) { return v % p; });
  if (!ba.isIdentity() || !ab.isIdentity()) fail(Errc::internal, "B_k A_k is not the identity");
  return m;
}

std::vector<RingElem> apply_a(const TriangularPair& m, const Poly& f) {
  const Ring& r = f.ring();
  const auto n = m.a.rows();
  if (f.degree() >= n) fail(Errc::invalid_argument, "apply_a: degree must be < p^k");
  std::vector<RingElem> out(static_cast<std::size_t>(n), r.zero());
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      if (m.a(i, j) != 0) out[i] = r.add(out[i], r.scale(m.a(i, j), f.coeff(static_cast<std::size_t>(j))));
    }
  }
  return out;
}

std::vector<Poly> periodic_odd_polys(const Ring& field, int k, std::int64_t size_cap,
                                     std::uint64_t work_budget) {
  if (!field.is_field()) fail(Errc::invalid_argument, "periodic_odd_polys needs a finite field");
  const std::int64_t p = field.characteristic();
  const std::int64_t q = *field.cardinality();
  const TriangularPair m = build_matrices(p, k, size_cap);
  const auto n = static_cast<std::size_t>(m.b.rows());
  const std::uint64_t total = bounded_pow(static_cast<std::uint64_t>(q - 1), n, work_budget);
  if (total > work_budget) fail(Errc::budget_exceeded, "(q-1)^(p^k) exceeds the work budget");

  std::vector<Poly> out;
  out.reserve(total);
  std::vector<std::int64_t> v(n, 1);  // codes of nonzero entries, odometer order
  for (std::uint64_t count = 0; count < total; ++count) {
    std::vector<RingElem> c(n, field.zero());
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        if (m.b(i, j) != 0) c[i] = field.add(c[i], field.scale(m.b(i, j), field.from_code(v[j])));
      }
    }
    out.emplace_back(field, std::move(c));
    for (std::size_t pos = n; pos-- > 0;) {
      if (++v[pos] < q) break;
      v[pos] = 1;
    }
  }
  return out;
}

mpz_class count_cycles_formula(std::int64_t q, std::int64_t p, int k) {
  if (k < 0) fail(Errc::invalid_argument, "count_cycles_formula needs k >= 0");
  const auto f = q >= 2 ? factorize(q) : decltype(factorize(2)){};
  if (f.size() != 1 || f[0].first != p) {
    fail(Errc::invalid_argument, std::to_string(q) + " is not a power of " + std::to_string(p));
  }
  const mpz_class base(static_cast<long>(q - 1));
  if (k == 0) return base;
  mpz_class pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  const mpz_class pk1 = pk / p;
  mpz_class hi, lo;
  mpz_pow_ui(hi.get_mpz_t(), base.get_mpz_t(), pk.get_ui());
  mpz_pow_ui(lo.get_mpz_t(), base.get_mpz_t(), pk1.get_ui());
  const mpz_class diff = hi - lo;
  if (!mpz_divisible_p(diff.get_mpz_t(), pk.get_mpz_t())) {
    fail(Errc::internal, "cycle-count formula is not integral for q=" + std::to_string(q) +
                             ", k=" + std::to_string(k));
  }
  return diff / pk;
}

std::vector<Poly> canonical_cycle(std::vector<Poly> cycle) {
  auto it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), it, cycle.end());
  return cycle;
}

std::vector<Poly> all_polys(const Ring& ring, int degree_cap, std::uint64_t work_budget) {
  if (!ring.is_finite()) fail(Errc::enumeration_unsupported, "enumeration needs a finite ring");
  if (degree_cap < 0) fail(Errc::invalid_argument, "degree cap must be >= 0");
  const std::int64_t q = *ring.cardinality();
  const auto len = static_cast<std::size_t>(degree_cap) + 1;
  const std::uint64_t total = bounded_pow(static_cast<std::uint64_t>(q), len, work_budget);
  if (total > work_budget) fail(Errc::budget_exceeded, "q^(degree_cap+1) exceeds the work budget");
  std::vector<Poly> out;
  out.reserve(total);
  std::vector<std::int64_t> code(len, 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    std::vector<RingElem> c(len);
    for (std::size_t i = 0; i < len; ++i) c[i] = ring.from_code(code[i]);
    out.emplace_back(ring, std::move(c));
    for (std::size_t pos = 0; pos < len; ++pos) {
      if (++code[pos] < q) break;
      code[pos] = 0;
    }
  }
  return out;
}

CensusTable brute_force_census(const Ring& ring, int degree_cap, std::uint64_t work_budget) {
  std::set<std::vector<Poly>> cycles;
  std::set<Poly> on_known_cycle;
  for (const Poly& f : all_polys(ring, degree_cap, work_budget)) {
    if (on_known_cycle.contains(f)) continue;
    OrbitReport rep = orbit(f);
    if (!rep.found()) fail(Errc::budget_exceeded, "orbit budget exhausted during census");
    auto canon = canonical_cycle(std::move(rep.cycle));
    on_known_cycle.insert(canon.begin(), canon.end());
    cycles.insert(std::move(canon));
  }

  CensusTable table{ring.spec(), degree_cap, {}};
  for (const auto& cyc : cycles) ++table.counts[cyc.size()];
  return table;
}

CensusTable matrix_census(const Ring& field, int k, std::int64_t size_cap, std::uint64_t work_budget) {
  const std::vector<Poly> odd = periodic_odd_polys(field, k, size_cap, work_budget);
  std::set<Poly> seen;
  CensusTable table{field.spec(), -1, {}};
  table.counts[1] = 1;  // the zero cycle
  for (const Poly& f : odd) {
    if (seen.contains(f)) continue;
    std::vector<Poly> cyc{f};
    for (Poly g = collatz_step(f); !(g == f); g = collatz_step(g)) {
      cyc.push_back(g);
      if (cyc.size() > 2 * static_cast<std::size_t>(size_cap) * 2) {
        fail(Errc::internal, "matrix-enumerated polynomial is not periodic");
      }
    }
    seen.insert(cyc.begin(), cyc.end());
    ++table.counts[cyc.size()];
  }
  return table;
}

std::string to_csv(const CensusTable& table) {
  std::ostringstream os;
  os << "length,count\n";
  for (const auto& [len, cnt] : table.counts) os << len << ',' << cnt << '\n';
  return os.str();
}

}  // namespace ringcollatz
