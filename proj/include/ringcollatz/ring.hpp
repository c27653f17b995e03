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

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace ringcollatz {

/// Coefficients of a polynomial over F_p, little-endian, no trailing zeros.
using FpCoeffs = std::vector<std::int64_t>;

/// An element of one of the supported coefficient rings.
///
/// The active alternative depends on the owning ring:
///   - Z/N and GF(q): an integer code in [0, q). For GF(p^k) the code is the
///     base-p encoding of the reduced coefficient vector (digit i = coeff of y^i).
///   - F_p[t]: the coefficient vector in t.
///   - Z: an arbitrary-precision integer.
/// Values are always canonical, so equality of storage is ring equality.
class RingElem {
 public:
  using Storage = std::variant<std::int64_t, FpCoeffs, mpz_class>;

  RingElem() : v_(std::int64_t{0}) {}
  explicit RingElem(std::int64_t code) : v_(code) {}
  explicit RingElem(FpCoeffs coeffs) : v_(std::move(coeffs)) {}
  explicit RingElem(mpz_class value) : v_(std::move(value)) {}

  const Storage& storage() const noexcept { return v_; }

  bool holds_code() const noexcept { return v_.index() == 0; }
  std::int64_t code() const { return std::get<0>(v_); }
  const FpCoeffs& coeffs() const { return std::get<1>(v_); }
  const mpz_class& integer() const { return std::get<2>(v_); }

  friend bool operator==(const RingElem& a, const RingElem& b);
  friend std::strong_ordering operator<=>(const RingElem& a, const RingElem& b);

 private:
  Storage v_;
};

enum class RingKind { zmod, galois, poly_over_prime, integers };

/// Prime factorization of a positive characteristic: pairs (p_i, alpha_i)
/// with p_i strictly increasing.
struct CharFactorization {
  std::vector<std::pair<std::int64_t, int>> factors;
  std::int64_t product = 1;
};

/// A supported coefficient ring R. Cheap to copy; immutable.
class Ring {
 public:
  static Ring zmod(std::int64_t n);
  /// GF(p^k) as F_p[y]/(modulus); modulus little-endian, monic, irreducible.
  static Ring galois_field(std::int64_t p, FpCoeffs modulus);
  /// GF(q) with the lexicographically smallest monic irreducible modulus.
  static Ring galois_field(std::int64_t q);
  static Ring poly_over_prime(std::int64_t p);
  static Ring integers();

  RingKind kind() const noexcept;
  /// 0 for Z.
  std::int64_t characteristic() const noexcept;
  std::optional<std::int64_t> cardinality() const noexcept;
  bool is_finite() const noexcept { return cardinality().has_value(); }
  bool is_field() const noexcept;
  /// The prime p of GF(p^k) or F_p[t]; N for Z/N with N prime.
  std::int64_t prime() const;
  /// k for GF(p^k), 1 for other finite rings.
  int extension_degree() const noexcept;
  const FpCoeffs& modulus() const;

  /// Canonical textual spec; parse_ring(spec()) == *this.
  std::string spec() const;

  RingElem zero() const;
  RingElem one() const;
  RingElem from_int(std::int64_t n) const;
  RingElem from_int(const mpz_class& n) const;
  /// Validates and reduces raw coefficients (GF(q), F_p[t]).
  RingElem from_coeffs(const FpCoeffs& c) const;
  /// Coefficient vector of a GF or F_p[t] element (trimmed).
  FpCoeffs to_coeffs(const RingElem& a) const;

  bool is_zero(const RingElem& a) const;
  RingElem add(const RingElem& a, const RingElem& b) const;
  RingElem sub(const RingElem& a, const RingElem& b) const;
  RingElem neg(const RingElem& a) const;
  RingElem mul(const RingElem& a, const RingElem& b) const;
  /// n * a for an integer n.
  RingElem scale(std::int64_t n, const RingElem& a) const;
  bool is_unit(const RingElem& a) const;

  /// Finite rings only: bijection between elements and codes [0, q), 0 <-> zero.
  RingElem from_code(std::int64_t code) const;
  std::int64_t code(const RingElem& a) const;

  /// Finite rings only: every element once, ascending code order.
  std::vector<RingElem> elements() const;

  /// Largest t-degree of an F_p[t] element (-1 for zero); 0 otherwise.
  int t_degree(const RingElem& a) const;

  friend bool operator==(const Ring& a, const Ring& b);

 private:
  struct Impl;
  explicit Ring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

/// Parses `Z/<N>`, `F<p>`, `F<q>`, `F<q>=F<p>[y]/(<poly>)`, `F<p>[t]`, `Z`.
/// Case-insensitive; whitespace is ignored.
Ring parse_ring(std::string_view text);

CharFactorization characteristic_factorization(const Ring& ring);

bool is_prime(std::int64_t n);
/// Trial-division factorization of n >= 1.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

namespace fp {
// Polynomial arithmetic over F_p on little-endian coefficient vectors.
void trim(FpCoeffs& a);
FpCoeffs add(const FpCoeffs& a, const FpCoeffs& b, std::int64_t p);
FpCoeffs sub(const FpCoeffs& a, const FpCoeffs& b, std::int64_t p);
FpCoeffs mul(const FpCoeffs& a, const FpCoeffs& b, std::int64_t p);
FpCoeffs scale(std::int64_t c, const FpCoeffs& a, std::int64_t p);
/// Remainder modulo a monic polynomial.
FpCoeffs rem(FpCoeffs a, const FpCoeffs& monic, std::int64_t p);
bool is_irreducible(const FpCoeffs& monic, std::int64_t p);
}  // namespace fp

}  // namespace ringcollatz
