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
#include <vector>

#include "ringcollatz/parity.hpp"
#include "ringcollatz/poly.hpp"

namespace ringcollatz {

/// The power series u (1 + x v)^(-1) in R[[x]]. No normalization is performed:
/// different (u, v) may denote the same series, and equality compares
/// u1 (1 + x v2) with u2 (1 + x v1) exactly.
class RationalSeries {
 public:
  RationalSeries(Poly u, Poly v);
  /// A polynomial viewed as a series (v = 0).
  explicit RationalSeries(Poly u);

  const Ring& ring() const noexcept { return u_.ring(); }
  const Poly& u() const noexcept { return u_; }
  const Poly& v() const noexcept { return v_; }
  /// 1 + x v.
  Poly denominator() const;
  RingElem constant_term() const { return u_.constant_term(); }
  bool is_odd() const { return u_.is_odd(); }
  bool is_zero() const { return u_.is_zero(); }

  /// The first `terms` coefficients of the series.
  std::vector<RingElem> truncate(std::size_t terms) const;

  friend bool operator==(const RationalSeries& a, const RationalSeries& b);

 private:
  Poly u_;
  Poly v_;
};

/// (x+1) f - f(0) for odd f, f / x otherwise; v is kept fixed.
RationalSeries series_T(const RationalSeries& f);
/// ((x+1) f - f(0)) / x for odd f, f / x otherwise; v is kept fixed.
RationalSeries series_T_condensed(const RationalSeries& f);

enum class MapKind { full, condensed };

/// Constant terms (as element codes) of the first n iterates. Finite rings only.
ParityVector parity_vector(const RationalSeries& f, std::size_t n, MapKind which);

/// The unique series with condensed period dividing n and condensed parity
/// vector v (entries are element codes of `ring`).
RationalSeries periodic_from_parity(const Ring& ring, const ParityVector& v);

/// The unique f with T^n(f) = f and full parity vector v; v must be cyclically
/// zero dense. (0) yields the zero series.
RationalSeries periodic_from_cyclic_parity(const Ring& ring, const ParityVector& v);

struct SeriesOrbitReport {
  bool found = false;
  std::uint64_t preperiod = 0;
  std::vector<RationalSeries> cycle;
  ParityVector parity_trace;  // constant terms of T^0 .. T^(preperiod+period-1)
  std::uint64_t steps_taken = 0;
};

inline constexpr std::uint64_t kDefaultSeriesBudget = 1'000'000;

/// Iterates the full map until a cycle is found. Throws Errc::budget_exceeded
/// when preperiod + period does not fit the budget.
SeriesOrbitReport series_orbit(const RationalSeries& f, std::uint64_t budget = kDefaultSeriesBudget);

struct OmegaCensus {
  std::uint64_t omega_size = 0;                      // |Omega_n|
  std::vector<std::vector<RationalSeries>> cycles;   // cycles of exact length n
};

/// Builds Omega_n from the cyclically zero-dense vectors of length n, checks
/// each member's round trip, and groups the members of exact period n into cycles.
OmegaCensus omega_census(const Ring& ring, std::size_t n, std::uint64_t work_budget = kDefaultWorkBudget);

}  // namespace ringcollatz
