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

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "ringcollatz/dyadic.hpp"
#include "ringcollatz/fq_census.hpp"
#include "ringcollatz/parity.hpp"
#include "ringcollatz/poly.hpp"
#include "ringcollatz/series.hpp"

namespace ringcollatz {

using Json = nlohmann::ordered_json;

/// Element text: an integer n (read as n * 1), or a little-endian coefficient
/// array such as [1,1] for GF(p^k) and F_p[t]. Z accepts arbitrary-size integers.
RingElem parse_element(const Ring& ring, std::string_view text);
std::string format_element(const Ring& ring, const RingElem& a);

/// Polynomial text: [c0,c1,...,cn] over the element syntax.
Poly parse_poly(const Ring& ring, std::string_view text);
std::string format_poly(const Poly& f);

/// Series text: {u:[...],v:[...]}; key quotes are optional, v defaults to [].
RationalSeries parse_series(const Ring& ring, std::string_view text);
std::string format_series(const RationalSeries& f);

/// Integer vector text: [a,b,...] or a bare digit string such as 100.
ParityVector parse_vector(std::string_view text);
std::string format_vector(const ParityVector& v);

/// JSON form: integers for Z/N and prime fields, decimal strings for Z,
/// coefficient arrays for GF(p^k) with k > 1 and for F_p[t].
Json element_json(const Ring& ring, const RingElem& a);
Json poly_json(const Poly& f);
Json series_json(const RationalSeries& f);
Json census_json(const CensusTable& table);
Json ledger_json(const CountLedger& ledger);
Json matrix_json(const IntMatrix& m);
Json rational_json(const DyadicRational& f);

}  // namespace ringcollatz
