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

#include "ringcollatz/io.hpp"

#include <cctype>

#include "ringcollatz/error.hpp"

namespace ringcollatz {

namespace {

// A parsed value: an integer literal or a bracketed list.
struct Node {
  bool is_list = false;
  mpz_class integer;
  std::vector<Node> items;
};

class Reader {
 public:
  explicit Reader(std::string_view s) : s_(s) {}

  Node value() {
    skip();
    if (peek() == '[') {
      ++i_;
      Node n;
      n.is_list = true;
      skip();
      if (peek() == ']') {
        ++i_;
        return n;
      }
      while (true) {
        n.items.push_back(value());
        skip();
        const char c = take();
        if (c == ']') return n;
        if (c != ',') error("expected ',' or ']'");
      }
    }
    const bool quoted = peek() == '"';
    if (quoted) ++i_;
    std::string digits;
    if (peek() == '-' || peek() == '+') digits.push_back(take());
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) digits.push_back(take());
    if (quoted && take() != '"') error("unterminated string");
    if (digits.empty() || digits == "-" || digits == "+") error("expected an integer");
    Node n;
    n.integer.set_str(digits[0] == '+' ? digits.substr(1) : digits, 10);
    return n;
  }

  // A key inside {...}, with or without quotes.
  std::string key() {
    skip();
    const bool quoted = peek() == '"';
    if (quoted) ++i_;
    std::string k;
    while (i_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[i_]))) k.push_back(take());
    if (quoted && take() != '"') error("unterminated key");
    skip();
    if (take() != ':') error("expected ':'");
    return k;
  }

  void expect(char c) {
    skip();
    if (take() != c) error(std::string("expected '") + c + "'");
  }
  char next_nonspace() {
    skip();
    return peek();
  }
  void finish() {
    skip();
    if (i_ != s_.size()) error("trailing characters");
  }
  [[noreturn]] void error(const std::string& what) const {
    fail(Errc::parse_error, what + " at offset " + std::to_string(i_) + " in '" + std::string(s_) + "'");
  }

 private:
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  char peek() const { return i_ < s_.size() ? s_[i_] : '\0'; }
  char take() { return i_ < s_.size() ? s_[i_++] : '\0'; }

  std::string_view s_;
  std::size_t i_ = 0;
};

std::int64_t small(const mpz_class& z, std::string_view text) {
  if (!z.fits_slong_p()) fail(Errc::parse_error, "integer out of range in '" + std::string(text) + "'");
  return z.get_si();
}

RingElem element_from(const Ring& ring, const Node& n, std::string_view text) {
  if (!n.is_list) {
    return ring.from_int(n.integer);
  }
  if (ring.kind() != RingKind::galois && ring.kind() != RingKind::poly_over_prime) {
    fail(Errc::parse_error, "coefficient arrays need a GF(p^k) or F_p[t] ring: '" + std::string(text) + "'");
  }
  FpCoeffs c;
  for (const auto& item : n.items) {
    if (item.is_list) fail(Errc::parse_error, "nested array inside an element: '" + std::string(text) + "'");
    c.push_back(small(item.integer, text));
  }
  return ring.from_coeffs(c);
}

Poly poly_from(const Ring& ring, const Node& n, std::string_view text) {
  if (!n.is_list) fail(Errc::parse_error, "polynomial must be a bracketed list: '" + std::string(text) + "'");
  std::vector<RingElem> c;
  for (const auto& item : n.items) c.push_back(element_from(ring, item, text));
  return Poly(ring, std::move(c));
}

}  // namespace

RingElem parse_element(const Ring& ring, std::string_view text) {
  Reader r(text);
  Node n = r.value();
  r.finish();
  return element_from(ring, n, text);
}

std::string format_element(const Ring& ring, const RingElem& a) {
  switch (ring.kind()) {
    case RingKind::integers:
      return a.integer().get_str();
    case RingKind::zmod:
      return std::to_string(a.code());
    case RingKind::galois:
    case RingKind::poly_over_prime: {
      const FpCoeffs c = ring.to_coeffs(a);
      if (c.size() <= 1) return std::to_string(c.empty() ? 0 : c[0]);
      std::string s = "[";
      for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
      return s + "]";
    }
  }
  return {};
}

Poly parse_poly(const Ring& ring, std::string_view text) {
  Reader r(text);
  Node n = r.value();
  r.finish();
  return poly_from(ring, n, text);
}

std::string format_poly(const Poly& f) {
  std::string s = "[";
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (i) s += ",";
    s += format_element(f.ring(), f.coeffs()[i]);
  }
  return s + "]";
}

RationalSeries parse_series(const Ring& ring, std::string_view text) {
  Reader r(text);
  if (r.next_nonspace() == '[') {
    Node n = r.value();
    r.finish();
    return RationalSeries(poly_from(ring, n, text));
  }
  r.expect('{');
  std::optional<Poly> u, v;
  while (true) {
    const std::string k = r.key();
    Node n = r.value();
    if (k == "u" && !u) {
      u = poly_from(ring, n, text);
    } else if (k == "v" && !v) {
      v = poly_from(ring, n, text);
    } else {
      r.error("unexpected key '" + k + "'");
    }
    const char c = r.next_nonspace();
    r.expect(c == ',' ? ',' : '}');
    if (c != ',') break;
  }
  r.finish();
  if (!u) r.error("missing key 'u'");
  return RationalSeries(*u, v.value_or(Poly(ring)));
}

std::string format_series(const RationalSeries& f) {
  return "{u:" + format_poly(f.u()) + ",v:" + format_poly(f.v()) + "}";
}

ParityVector parse_vector(std::string_view text) {
  std::string_view t = text;
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
  while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
  if (!t.empty() && t.front() != '[') {
    ParityVector v;
    for (char c : t) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        fail(Errc::parse_error, "bad digit string: '" + std::string(text) + "'");
      }
      v.push_back(c - '0');
    }
    return v;
  }
  Reader r(t);
  Node n = r.value();
  r.finish();
  if (!n.is_list) fail(Errc::parse_error, "vector must be a bracketed list: '" + std::string(text) + "'");
  ParityVector v;
  for (const auto& item : n.items) {
    if (item.is_list) fail(Errc::parse_error, "nested array inside a vector: '" + std::string(text) + "'");
    v.push_back(small(item.integer, text));
  }
  return v;
}

std::string format_vector(const ParityVector& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

Json element_json(const Ring& ring, const RingElem& a) {
  switch (ring.kind()) {
    case RingKind::integers:
      return a.integer().get_str();
    case RingKind::zmod:
      return a.code();
    case RingKind::galois:
      if (ring.extension_degree() == 1) return a.code();
      return ring.to_coeffs(a);
    case RingKind::poly_over_prime:
      return ring.to_coeffs(a);
  }
  return nullptr;
}

Json poly_json(const Poly& f) {
  Json arr = Json::array();
  for (const auto& c : f.coeffs()) arr.push_back(element_json(f.ring(), c));
  return arr;
}

Json series_json(const RationalSeries& f) {
  return Json{{"ring", f.ring().spec()}, {"u", poly_json(f.u())}, {"v", poly_json(f.v())}};
}

Json census_json(const CensusTable& table) {
  Json rows = Json::array();
  for (const auto& [len, count] : table.counts) rows.push_back(Json{{"length", len}, {"count", count}});
  return Json{{"ring", table.ring}, {"degree_cap", table.degree_cap}, {"cycles", rows}};
}

Json ledger_json(const CountLedger& ledger) {
  Json rows = Json::array();
  for (const auto& r : ledger.rows) {
    rows.push_back(Json{{"n", r.n}, {"e", r.e.get_str()}, {"j", r.j.get_str()}, {"i", r.i.get_str()},
                        {"Z", r.z.get_str()}});
  }
  return Json{{"q", ledger.q}, {"rows", rows}};
}

Json matrix_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json rational_json(const DyadicRational& f) { return f.str(); }

}  // namespace ringcollatz
