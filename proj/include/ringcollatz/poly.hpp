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
#include <optional>
#include <vector>

#include <gmpxx.h>

#include "ringcollatz/ring.hpp"

namespace ringcollatz {

/// A polynomial over a supported ring, little-endian, no trailing zeros.
class Poly {
 public:
  explicit Poly(Ring ring) : ring_(std::move(ring)) {}
  Poly(Ring ring, std::vector<RingElem> coeffs);

  static Poly constant(const Ring& ring, const RingElem& c);
  static Poly from_ints(const Ring& ring, const std::vector<std::int64_t>& c);
  /// x^k.
  static Poly monomial(const Ring& ring, std::size_t k);

  const Ring& ring() const noexcept { return ring_; }
  const std::vector<RingElem>& coeffs() const noexcept { return c_; }

  bool is_zero() const noexcept { return c_.empty(); }
  /// -1 stands for the degree of the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  RingElem constant_term() const { return c_.empty() ? ring_.zero() : c_.front(); }
  const RingElem& leading() const { return c_.back(); }
  RingElem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ring_.zero(); }
  /// Nonzero constant term.
  bool is_odd() const { return !c_.empty() && !ring_.is_zero(c_.front()); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  /// Degree-major, then coefficients from x^0 upward.
  friend std::strong_ordering operator<=>(const Poly& a, const Poly& b);

 private:
  Ring ring_;
  std::vector<RingElem> c_;
};

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const RingElem& c, const Poly& f);
/// f * x^k.
Poly shift_up(const Poly& f, std::size_t k);
/// f / x; requires f(0) = 0.
Poly divide_by_x(const Poly& f);
/// (x + 1)^s.
Poly x_plus_one_pow(const Ring& ring, std::size_t s);

/// T(f) = (x+1) f - f(0) for odd f, f / x otherwise.
Poly collatz_step(const Poly& f);
/// Pi(f) = ((x+1) f - f(0)) / x.
Poly pi_step(const Poly& f);
/// The shift L_n on R[x]_{<=n}: drops b_0 and moves every b_i to x^{i-1}.
Poly shift_map(const Poly& f);

struct OrbitReport {
  std::uint64_t preperiod = 0;
  std::vector<Poly> cycle;        // empty when the budget ran out
  std::uint64_t steps_taken = 0;
  std::uint64_t budget = 0;
  std::optional<std::vector<Poly>> trace;  // T^0 .. T^(preperiod+period-1)

  bool found() const noexcept { return !cycle.empty(); }
};

/// 2 K(deg f + 1) (deg f + 2) in positive characteristic (clamped to 2^40);
/// 1000 for Z.
std::uint64_t default_orbit_budget(const Poly& f);

/// Iterates T with Brent's cycle detection. For F_p[t] the t-degree of the
/// coefficients is checked never to grow.
OrbitReport orbit(const Poly& f, std::optional<std::uint64_t> budget = std::nullopt,
                  bool keep_trace = false);

/// Default cap on the binomial-row count K used by the periodicity criterion.
inline constexpr std::uint64_t kDefaultThresholdCap = 1'000'000;

/// Periodicity of f in positive characteristic. Odd f of degree >= 1 use the
/// binomial-sum criterion; other f are decided by bounded iteration.
bool is_periodic(const Poly& f, std::uint64_t threshold_cap = kDefaultThresholdCap);

/// 2 K(deg f) for odd f of degree >= 1 over a positive-characteristic ring.
mpz_class period_divisor_bound(const Poly& f);

/// Minimal n >= 1 with T^n(f) = f. Throws Errc::not_periodic.
std::uint64_t exact_period(const Poly& f, std::uint64_t threshold_cap = kDefaultThresholdCap);

enum class CharZeroClass { on_zero_cycle, on_constant_cycle, not_periodic };

/// Cycle membership over Z: 0, (a, ax), or none. Does not decide eventual
/// periodicity.
CharZeroClass char_zero_classify(const Poly& f);

/// Over a finite field: whether T^(p d (d+1) - d)(f) is periodic, d = deg f.
bool preperiod_bound_check(const Poly& f);

}  // namespace ringcollatz
