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

#include "ringcollatz/ring.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

#include "ringcollatz/error.hpp"

namespace ringcollatz {

const char* to_string(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid argument";
    case Errc::parse_error: return "parse error";
    case Errc::not_prime: return "not prime";
    case Errc::reducible_modulus: return "reducible modulus";
    case Errc::char_zero: return "char-zero ring";
    case Errc::positive_char: return "positive-characteristic ring";
    case Errc::infinite_valuation: return "infinite valuation";
    case Errc::precondition_failed: return "precondition failed";
    case Errc::enumeration_unsupported: return "enumeration unsupported";
    case Errc::budget_exceeded: return "budget exceeded";
    case Errc::cap_exceeded: return "cap exceeded";
    case Errc::not_periodic: return "not periodic";
    case Errc::internal: return "internal consistency failure";
  }
  return "unknown";
}

bool operator==(const RingElem& a, const RingElem& b) {
  if (a.v_.index() != b.v_.index()) return false;
  switch (a.v_.index()) {
    case 0: return std::get<0>(a.v_) == std::get<0>(b.v_);
    case 1: return std::get<1>(a.v_) == std::get<1>(b.v_);
    default: return std::get<2>(a.v_) == std::get<2>(b.v_);
  }
}

std::strong_ordering operator<=>(const RingElem& a, const RingElem& b) {
  if (a.v_.index() != b.v_.index()) return a.v_.index() <=> b.v_.index();
  switch (a.v_.index()) {
    case 0: return std::get<0>(a.v_) <=> std::get<0>(b.v_);
    case 1: {
      // Shorter (lower t-degree) first, then lexicographic from t^0.
      const auto& x = std::get<1>(a.v_);
      const auto& y = std::get<1>(b.v_);
      if (x.size() != y.size()) return x.size() <=> y.size();
      return x <=> y;
    }
    default: {
      int c = cmp(std::get<2>(a.v_), std::get<2>(b.v_));
      return c < 0 ? std::strong_ordering::less
                   : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }
  }
}

// ---------------------------------------------------------------------------
// F_p polynomial helpers

namespace fp {

namespace {
std::int64_t mod(std::int64_t a, std::int64_t p) {
  a %= p;
  return a < 0 ? a + p : a;
}
std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
  return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % p);
}
}  // namespace

void trim(FpCoeffs& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

FpCoeffs add(const FpCoeffs& a, const FpCoeffs& b, std::int64_t p) {
  FpCoeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    r[i] = s >= p ? s - p : s;
  }
  trim(r);
  return r;
}

FpCoeffs sub(const FpCoeffs& a, const FpCoeffs& b, std::int64_t p) {
  FpCoeffs r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    std::int64_t s = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
    r[i] = s < 0 ? s + p : s;
  }
  trim(r);
  return r;
}

FpCoeffs mul(const FpCoeffs& a, const FpCoeffs& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  FpCoeffs r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = (r[i + j] + mulmod(a[i], b[j], p)) % p;
    }
  }
  trim(r);
  return r;
}

FpCoeffs scale(std::int64_t c, const FpCoeffs& a, std::int64_t p) {
  c = mod(c, p);
  FpCoeffs r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mulmod(c, a[i], p);
  trim(r);
  return r;
}

FpCoeffs rem(FpCoeffs a, const FpCoeffs& monic, std::int64_t p) {
  const std::size_t m = monic.size();
  trim(a);
  while (a.size() >= m) {
    const std::int64_t lead = a.back();
    const std::size_t shift = a.size() - m;
    for (std::size_t i = 0; i < m; ++i) {
      a[shift + i] = mod(a[shift + i] - mulmod(lead, monic[i], p), p);
    }
    trim(a);
  }
  return a;
}

bool is_irreducible(const FpCoeffs& monic, std::int64_t p) {
  const int k = static_cast<int>(monic.size()) - 1;
  if (k <= 0) return false;
  for (int d = 1; d <= k / 2; ++d) {
    // All monic divisors of degree d: lower coefficients range over F_p^d.
    std::int64_t count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (std::int64_t c = 0; c < count; ++c) {
      FpCoeffs div(d + 1);
      std::int64_t x = c;
      for (int i = 0; i < d; ++i) {
        div[i] = x % p;
        x /= p;
      }
      div[d] = 1;
      if (rem(monic, div, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace fp

// ---------------------------------------------------------------------------
// Primes

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  mpz_class z(static_cast<long>(n));
  return mpz_probab_prime_p(z.get_mpz_t(), 40) > 0;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  if (n < 1) fail(Errc::invalid_argument, "factorize: n must be >= 1");
  std::vector<std::pair<std::int64_t, int>> out;
  for (std::int64_t d = 2; d <= n / d; ++d) {
    if (n % d != 0) continue;
    int e = 0;
    while (n % d == 0) {
      n /= d;
      ++e;
    }
    out.emplace_back(d, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// ---------------------------------------------------------------------------
// Ring

namespace {
constexpr std::int64_t kMaxModulus = std::int64_t{1} << 62;
constexpr int kMaxExtensionDegree = 8;
constexpr std::int64_t kTableLimit = 256;
}  // namespace

struct Ring::Impl {
  RingKind kind = RingKind::integers;
  std::int64_t n = 0;  // N for Z/N, p for GF and F_p[t]
  int k = 1;
  std::int64_t q = 0;  // cardinality when finite
  bool n_prime = false;
  FpCoeffs modulus;
  // GF(q) operation tables for small q, indexed [a * q + b].
  std::vector<std::int32_t> add_table;
  std::vector<std::int32_t> mul_table;

  FpCoeffs decode(std::int64_t code) const {
    FpCoeffs d;
    while (code > 0) {
      d.push_back(code % n);
      code /= n;
    }
    return d;
  }
  std::int64_t encode(const FpCoeffs& d) const {
    std::int64_t code = 0;
    for (auto it = d.rbegin(); it != d.rend(); ++it) code = code * n + *it;
    return code;
  }
  std::int64_t gf_add(std::int64_t a, std::int64_t b) const {
    if (k == 1) {
      std::int64_t s = a + b;
      return s >= n ? s - n : s;
    }
    if (!add_table.empty()) return add_table[a * q + b];
    return encode(fp::add(decode(a), decode(b), n));
  }
  std::int64_t gf_mul(std::int64_t a, std::int64_t b) const {
    if (k == 1) return static_cast<std::int64_t>((static_cast<__int128>(a) * b) % n);
    if (!mul_table.empty()) return mul_table[a * q + b];
    return encode(fp::rem(fp::mul(decode(a), decode(b), n), modulus, n));
  }
  std::int64_t gf_neg(std::int64_t a) const {
    if (k == 1) return a == 0 ? 0 : n - a;
    FpCoeffs d = decode(a);
    for (auto& c : d) c = c == 0 ? 0 : n - c;
    return encode(d);
  }
};

Ring Ring::zmod(std::int64_t n) {
  if (n < 2) fail(Errc::invalid_argument, "Z/N requires N >= 2");
  if (n >= kMaxModulus) fail(Errc::invalid_argument, "Z/N requires N < 2^62");
  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::zmod;
  impl->n = n;
  impl->q = n;
  impl->n_prime = is_prime(n);
  return Ring(std::move(impl));
}

Ring Ring::galois_field(std::int64_t p, FpCoeffs modulus) {
  if (!is_prime(p)) fail(Errc::not_prime, "GF: characteristic " + std::to_string(p) + " is not prime");
  for (auto& c : modulus) c = ((c % p) + p) % p;
  fp::trim(modulus);
  if (modulus.size() < 2) fail(Errc::invalid_argument, "GF: modulus must have degree >= 1");
  if (modulus.back() != 1) fail(Errc::invalid_argument, "GF: modulus must be monic");
  const int k = static_cast<int>(modulus.size()) - 1;
  if (k > kMaxExtensionDegree) fail(Errc::cap_exceeded, "GF: extension degree capped at 8");
  if (!fp::is_irreducible(modulus, p)) fail(Errc::reducible_modulus, "GF: modulus is reducible");
  std::int64_t q = 1;
  for (int i = 0; i < k; ++i) {
    if (q > kMaxModulus / p) fail(Errc::cap_exceeded, "GF: field size must be < 2^62");
    q *= p;
  }
  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::galois;
  impl->n = p;
  impl->k = k;
  impl->q = q;
  impl->n_prime = true;
  impl->modulus = std::move(modulus);
  if (k > 1 && q <= kTableLimit) {
    impl->add_table.resize(q * q);
    impl->mul_table.resize(q * q);
    for (std::int64_t a = 0; a < q; ++a) {
      const FpCoeffs da = impl->decode(a);
      for (std::int64_t b = 0; b < q; ++b) {
        const FpCoeffs db = impl->decode(b);
        impl->add_table[a * q + b] = static_cast<std::int32_t>(impl->encode(fp::add(da, db, p)));
        impl->mul_table[a * q + b] = static_cast<std::int32_t>(
            impl->encode(fp::rem(fp::mul(da, db, p), impl->modulus, p)));
      }
    }
  }
  return Ring(std::move(impl));
}

Ring Ring::galois_field(std::int64_t q) {
  const auto f = q >= 2 ? factorize(q) : decltype(factorize(2)){};
  if (f.size() != 1) fail(Errc::invalid_argument, "GF(q): q must be a prime power");
  const std::int64_t p = f[0].first;
  const int k = f[0].second;
  if (k == 1) return galois_field(p, FpCoeffs{0, 1});
  if (k > kMaxExtensionDegree) fail(Errc::cap_exceeded, "GF: extension degree capped at 8");
  // Smallest monic irreducible: lower coefficients enumerated as codes.
  std::int64_t count = 1;
  for (int i = 0; i < k; ++i) count *= p;
  for (std::int64_t c = 0; c < count; ++c) {
    FpCoeffs m(k + 1, 0);
    std::int64_t x = c;
    for (int i = 0; i < k; ++i) {
      m[i] = x % p;
      x /= p;
    }
    m[k] = 1;
    if (fp::is_irreducible(m, p)) return galois_field(p, m);
  }
  fail(Errc::internal, "no irreducible polynomial found");
}

Ring Ring::poly_over_prime(std::int64_t p) {
  if (!is_prime(p)) fail(Errc::not_prime, "F_p[t]: " + std::to_string(p) + " is not prime");
  if (p >= kMaxModulus) fail(Errc::invalid_argument, "F_p[t] requires p < 2^62");
  auto impl = std::make_shared<Impl>();
  impl->kind = RingKind::poly_over_prime;
  impl->n = p;
  impl->n_prime = true;
  return Ring(std::move(impl));
}

Ring Ring::integers() {
  static const Ring z = [] {
    auto impl = std::make_shared<Impl>();
    impl->kind = RingKind::integers;
    return Ring(std::move(impl));
  }();
  return z;
}

RingKind Ring::kind() const noexcept { return impl_->kind; }

std::int64_t Ring::characteristic() const noexcept {
  return impl_->kind == RingKind::integers ? 0 : impl_->n;
}

std::optional<std::int64_t> Ring::cardinality() const noexcept {
  if (impl_->kind == RingKind::zmod || impl_->kind == RingKind::galois) return impl_->q;
  return std::nullopt;
}

bool Ring::is_field() const noexcept {
  return impl_->kind == RingKind::galois || (impl_->kind == RingKind::zmod && impl_->n_prime);
}

std::int64_t Ring::prime() const {
  if (!impl_->n_prime) fail(Errc::invalid_argument, "ring characteristic is not prime");
  return impl_->n;
}

int Ring::extension_degree() const noexcept { return impl_->k; }

const FpCoeffs& Ring::modulus() const {
  if (impl_->kind != RingKind::galois) fail(Errc::invalid_argument, "ring has no field modulus");
  return impl_->modulus;
}

namespace {
std::string poly_in(const FpCoeffs& c, char var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (c[i] != 1 || i == 0) os << c[i];
    if (i >= 1) os << var;
    if (i >= 2) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}
}  // namespace

std::string Ring::spec() const {
  switch (impl_->kind) {
    case RingKind::zmod: return "Z/" + std::to_string(impl_->n);
    case RingKind::integers: return "Z";
    case RingKind::poly_over_prime: return "F" + std::to_string(impl_->n) + "[t]";
    case RingKind::galois:
      if (impl_->k == 1) return "F" + std::to_string(impl_->n);
      return "F" + std::to_string(impl_->q) + "=F" + std::to_string(impl_->n) + "[y]/(" +
             poly_in(impl_->modulus, 'y') + ")";
  }
  return {};
}

RingElem Ring::zero() const {
  switch (impl_->kind) {
    case RingKind::poly_over_prime: return RingElem(FpCoeffs{});
    case RingKind::integers: return RingElem(mpz_class(0));
    default: return RingElem(std::int64_t{0});
  }
}

RingElem Ring::one() const { return from_int(std::int64_t{1}); }

RingElem Ring::from_int(std::int64_t v) const {
  switch (impl_->kind) {
    case RingKind::integers: return RingElem(mpz_class(static_cast<long>(v)));
    case RingKind::poly_over_prime: {
      FpCoeffs c{fp::mod(v, impl_->n)};
      fp::trim(c);
      return RingElem(std::move(c));
    }
    default: return RingElem(fp::mod(v, impl_->n));
  }
}

RingElem Ring::from_int(const mpz_class& v) const {
  if (impl_->kind == RingKind::integers) return RingElem(v);
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(impl_->n));
  return from_int(static_cast<std::int64_t>(r.get_si()));
}

RingElem Ring::from_coeffs(const FpCoeffs& c) const {
  const std::int64_t p = impl_->n;
  FpCoeffs r(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) r[i] = fp::mod(c[i], p);
  fp::trim(r);
  switch (impl_->kind) {
    case RingKind::poly_over_prime: return RingElem(std::move(r));
    case RingKind::galois: {
      return RingElem(impl_->encode(fp::rem(std::move(r), impl_->modulus, p)));
    }
    default:
      fail(Errc::invalid_argument, "coefficient vectors are only valid for GF(q) and F_p[t]");
  }
}

FpCoeffs Ring::to_coeffs(const RingElem& a) const {
  switch (impl_->kind) {
    case RingKind::poly_over_prime: return a.coeffs();
    case RingKind::galois: return impl_->decode(a.code());
    default: fail(Errc::invalid_argument, "element has no coefficient vector");
  }
}

bool Ring::is_zero(const RingElem& a) const {
  switch (a.storage().index()) {
    case 0: return a.code() == 0;
    case 1: return a.coeffs().empty();
    default: return sgn(a.integer()) == 0;
  }
}

RingElem Ring::add(const RingElem& a, const RingElem& b) const {
  switch (impl_->kind) {
    case RingKind::zmod: {
      std::int64_t s = a.code() + b.code();
      return RingElem(s >= impl_->n ? s - impl_->n : s);
    }
    case RingKind::galois: return RingElem(impl_->gf_add(a.code(), b.code()));
    case RingKind::poly_over_prime: return RingElem(fp::add(a.coeffs(), b.coeffs(), impl_->n));
    case RingKind::integers: return RingElem(mpz_class(a.integer() + b.integer()));
  }
  return {};
}

RingElem Ring::neg(const RingElem& a) const {
  switch (impl_->kind) {
    case RingKind::zmod: return RingElem(a.code() == 0 ? 0 : impl_->n - a.code());
    case RingKind::galois: return RingElem(impl_->gf_neg(a.code()));
    case RingKind::poly_over_prime: return RingElem(fp::sub(FpCoeffs{}, a.coeffs(), impl_->n));
    case RingKind::integers: return RingElem(mpz_class(-a.integer()));
  }
  return {};
}

RingElem Ring::sub(const RingElem& a, const RingElem& b) const {
  switch (impl_->kind) {
    case RingKind::zmod: {
      std::int64_t s = a.code() - b.code();
      return RingElem(s < 0 ? s + impl_->n : s);
    }
    case RingKind::poly_over_prime: return RingElem(fp::sub(a.coeffs(), b.coeffs(), impl_->n));
    case RingKind::integers: return RingElem(mpz_class(a.integer() - b.integer()));
    default: return add(a, neg(b));
  }
}

RingElem Ring::mul(const RingElem& a, const RingElem& b) const {
  switch (impl_->kind) {
    case RingKind::zmod:
      return RingElem(static_cast<std::int64_t>((static_cast<__int128>(a.code()) * b.code()) % impl_->n));
    case RingKind::galois: return RingElem(impl_->gf_mul(a.code(), b.code()));
    case RingKind::poly_over_prime: return RingElem(fp::mul(a.coeffs(), b.coeffs(), impl_->n));
    case RingKind::integers: return RingElem(mpz_class(a.integer() * b.integer()));
  }
  return {};
}

RingElem Ring::scale(std::int64_t n, const RingElem& a) const {
  switch (impl_->kind) {
    case RingKind::integers: return RingElem(mpz_class(a.integer() * static_cast<long>(n)));
    case RingKind::poly_over_prime: return RingElem(fp::scale(n, a.coeffs(), impl_->n));
    case RingKind::galois:
      if (impl_->k > 1) {
        FpCoeffs d = fp::scale(n, impl_->decode(a.code()), impl_->n);
        return RingElem(impl_->encode(d));
      }
      [[fallthrough]];
    case RingKind::zmod:
      return RingElem(static_cast<std::int64_t>(
          (static_cast<__int128>(fp::mod(n, impl_->n)) * a.code()) % impl_->n));
  }
  return {};
}

bool Ring::is_unit(const RingElem& a) const {
  switch (impl_->kind) {
    case RingKind::zmod: return std::gcd(a.code(), impl_->n) == 1;
    case RingKind::galois: return a.code() != 0;
    case RingKind::poly_over_prime: return a.coeffs().size() == 1;
    case RingKind::integers: return abs(a.integer()) == 1;
  }
  return false;
}

RingElem Ring::from_code(std::int64_t code) const {
  if (!is_finite()) fail(Errc::enumeration_unsupported, "codes exist only for finite rings");
  if (code < 0 || code >= impl_->q) fail(Errc::invalid_argument, "element code out of range");
  return RingElem(code);
}

std::int64_t Ring::code(const RingElem& a) const {
  if (!is_finite()) fail(Errc::enumeration_unsupported, "codes exist only for finite rings");
  return a.code();
}

std::vector<RingElem> Ring::elements() const {
  if (!is_finite()) fail(Errc::enumeration_unsupported, "enumeration unsupported for infinite ring " + spec());
  std::vector<RingElem> out;
  out.reserve(static_cast<std::size_t>(impl_->q));
  for (std::int64_t c = 0; c < impl_->q; ++c) out.emplace_back(c);
  return out;
}

int Ring::t_degree(const RingElem& a) const {
  if (impl_->kind != RingKind::poly_over_prime) return 0;
  return static_cast<int>(a.coeffs().size()) - 1;
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.impl_ == b.impl_) return true;
  return a.impl_->kind == b.impl_->kind && a.impl_->n == b.impl_->n &&
         a.impl_->modulus == b.impl_->modulus;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

std::int64_t parse_count(std::string_view s, std::string_view what) {
  if (s.empty() || s.size() > 18 ||
      !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    fail(Errc::parse_error, "ring spec: bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return std::stoll(std::string(s));
}

// Parses a polynomial in y such as "y^2+2y+1" or "y^3-y-1" over F_p.
FpCoeffs parse_poly_in_y(std::string_view s, std::int64_t p) {
  std::vector<std::int64_t> coeffs;
  std::size_t i = 0;
  if (s.empty()) fail(Errc::parse_error, "ring spec: empty modulus");
  while (i < s.size()) {
    int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
    }
    std::int64_t coeff = 1;
    bool have_coeff = false;
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i > start) {
      coeff = parse_count(s.substr(start, i - start), "coefficient");
      have_coeff = true;
    }
    if (i < s.size() && s[i] == '*') ++i;
    std::size_t exp = 0;
    if (i < s.size() && s[i] == 'y') {
      ++i;
      exp = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        exp = static_cast<std::size_t>(parse_count(s.substr(start, i - start), "exponent"));
      }
    } else if (!have_coeff) {
      fail(Errc::parse_error, "ring spec: malformed modulus '" + std::string(s) + "'");
    }
    if (exp > 64) fail(Errc::cap_exceeded, "ring spec: modulus degree too large");
    if (coeffs.size() <= exp) coeffs.resize(exp + 1, 0);
    coeffs[exp] = fp::mod(coeffs[exp] + sign * fp::mod(coeff, p), p);
    if (i < s.size() && s[i] != '+' && s[i] != '-') {
      fail(Errc::parse_error, "ring spec: unexpected '" + std::string(1, s[i]) + "' in modulus");
    }
  }
  fp::trim(coeffs);
  return coeffs;
}

}  // namespace

Ring parse_ring(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (s == "z") return Ring::integers();
  if (s.rfind("z/", 0) == 0) return Ring::zmod(parse_count(std::string_view(s).substr(2), "modulus"));
  if (s.empty() || s[0] != 'f') fail(Errc::parse_error, "ring spec: unrecognized '" + std::string(text) + "'");

  std::string_view rest = std::string_view(s).substr(1);
  const auto eq = rest.find('=');
  if (eq == std::string_view::npos) {
    if (rest.size() > 3 && rest.substr(rest.size() - 3) == "[t]") {
      return Ring::poly_over_prime(parse_count(rest.substr(0, rest.size() - 3), "prime"));
    }
    return Ring::galois_field(parse_count(rest, "field size"));
  }
  // F<q>=F<p>[y]/(<poly>)
  const std::int64_t q = parse_count(rest.substr(0, eq), "field size");
  std::string_view rhs = rest.substr(eq + 1);
  const auto bracket = rhs.find("[y]/(");
  if (rhs.empty() || rhs[0] != 'f' || bracket == std::string_view::npos || rhs.back() != ')') {
    fail(Errc::parse_error, "ring spec: expected F<q>=F<p>[y]/(<poly>)");
  }
  const std::int64_t p = parse_count(rhs.substr(1, bracket - 1), "prime");
  if (!is_prime(p)) fail(Errc::not_prime, "ring spec: " + std::to_string(p) + " is not prime");
  const std::string_view poly = rhs.substr(bracket + 5, rhs.size() - bracket - 6);
  Ring r = Ring::galois_field(p, parse_poly_in_y(poly, p));
  if (*r.cardinality() != q) {
    fail(Errc::invalid_argument, "ring spec: F" + std::to_string(q) + " does not match modulus degree");
  }
  return r;
}

CharFactorization characteristic_factorization(const Ring& ring) {
  const std::int64_t n = ring.characteristic();
  if (n == 0) fail(Errc::char_zero, "char-zero ring, factorization undefined");
  return CharFactorization{factorize(n), n};
}

}  // namespace ringcollatz
