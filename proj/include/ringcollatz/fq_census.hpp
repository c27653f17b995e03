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

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <gmpxx.h>

#include "ringcollatz/budget.hpp"
#include "ringcollatz/poly.hpp"

namespace ringcollatz {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

/// The lower-triangular pair over F_p:
///   B(i, j) = (-1)^(i+j) C(i, j),  A(i, j) = C(i, j)   (0-based, i >= j),
/// with B A = A B = I.
struct TriangularPair {
  std::int64_t p = 2;
  int k = 1;
  IntMatrix b;
  IntMatrix a;
};

inline constexpr std::int64_t kMatrixSizeCap = 81;

/// C(n, m) mod p via Lucas' digit products.
std::int64_t binomial_mod_prime(std::uint64_t n, std::uint64_t m, std::int64_t p);

/// Builds B_k and A_k of size p^k and checks B A = I on construction.
TriangularPair build_matrices(std::int64_t p, int k, std::int64_t size_cap = kMatrixSizeCap);

/// A_k applied to the coefficient vector of f (degree < p^k) over the field of f.
std::vector<RingElem> apply_a(const TriangularPair& m, const Poly& f);

/// { B_k v : v in (F_q^*)^(p^k) } as polynomials; exactly (q-1)^(p^k) of them,
/// in lexicographic order of v.
std::vector<Poly> periodic_odd_polys(const Ring& field, int k,
                                     std::int64_t size_cap = kMatrixSizeCap,
                                     std::uint64_t work_budget = kDefaultWorkBudget);

/// Number of T-cycles of length 2 p^k over F_q (k = 0 gives the q-1 cycles of
/// length 2). Throws Errc::internal if the division is not exact.
mpz_class count_cycles_formula(std::int64_t q, std::int64_t p, int k);

/// Distinct T-cycles tabulated by length.
struct CensusTable {
  std::string ring;
  int degree_cap = 0;
  std::map<std::uint64_t, std::uint64_t> counts;

  std::uint64_t count(std::uint64_t length) const {
    auto it = counts.find(length);
    return it == counts.end() ? 0 : it->second;
  }
};

/// Rotation of a cycle starting at its least member.
std::vector<Poly> canonical_cycle(std::vector<Poly> cycle);

/// Every polynomial of degree <= degree_cap over a finite ring, in odometer
/// order of coefficient codes (x^0 fastest).
std::vector<Poly> all_polys(const Ring& ring, int degree_cap, std::uint64_t work_budget = kDefaultWorkBudget);

/// Orbits every polynomial of degree <= degree_cap and collects the cycles.
CensusTable brute_force_census(const Ring& ring, int degree_cap,
                               std::uint64_t work_budget = kDefaultWorkBudget);

/// Cycles through the odd periodic polynomials of degree < p^k obtained from
/// periodic_odd_polys, plus the zero cycle. Complete for lengths 1, 2 and
/// 2 p^j with j <= k.
CensusTable matrix_census(const Ring& field, int k, std::int64_t size_cap = kMatrixSizeCap,
                          std::uint64_t work_budget = kDefaultWorkBudget);

std::string to_csv(const CensusTable& table);

}  // namespace ringcollatz
