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

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "ringcollatz/budget.hpp"
#include "ringcollatz/dyadic.hpp"
#include "ringcollatz/error.hpp"
#include "ringcollatz/fq_census.hpp"
#include "ringcollatz/io.hpp"
#include "ringcollatz/parity.hpp"
#include "ringcollatz/poly.hpp"
#include "ringcollatz/series.hpp"
#include "ringcollatz/valuation.hpp"
#include "ringcollatz/verify.hpp"

namespace rc = ringcollatz;
using rc::Json;

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kBudget = 2, kVerifyFailed = 3 };

struct Options {
  bool json = false;
  std::uint64_t seed = 1;
  std::optional<std::uint64_t> budget;
  bool verify = false;
  bool strict = false;
  bool condensed = false;
  bool trace = false;
  bool csv = false;
  std::string ring;
  std::string poly;
  std::string series;
  std::string rational;
  std::string vec;
  std::string domain;
  std::string n_range;
  std::string k_range;
  std::int64_t q = 2;
  int degree = 2;
  std::optional<int> matrix_k;
  bool dump_matrices = false;
  std::optional<std::int64_t> p;
  std::optional<std::string> val_n;
  std::optional<std::string> val_m;
  std::optional<std::int64_t> characteristic;
  std::optional<std::size_t> digits;
  std::string suite;
};

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string& text) {
  auto to_u = [&](const std::string& s) {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      rc::fail(rc::Errc::parse_error, "bad range: '" + text + "'");
    }
    return static_cast<std::uint64_t>(std::stoull(s));
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto v = to_u(text);
    return {v, v};
  }
  const auto lo = to_u(text.substr(0, dots));
  const auto hi = to_u(text.substr(dots + 2));
  if (lo > hi) rc::fail(rc::Errc::parse_error, "empty range: '" + text + "'");
  return {lo, hi};
}

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

Json poly_list_json(const std::vector<rc::Poly>& v) {
  Json a = Json::array();
  for (const auto& f : v) a.push_back(rc::poly_json(f));
  return a;
}

std::string poly_list_text(const std::vector<rc::Poly>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + rc::format_poly(v[i]);
  return s + "]";
}

std::string rational_list_text(const std::vector<rc::DyadicRational>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].str();
  return s + ")";
}

Json rational_list_json(const std::vector<rc::DyadicRational>& v) {
  Json a = Json::array();
  for (const auto& f : v) a.push_back(rc::rational_json(f));
  return a;
}

int cmd_orbit(const Options& o) {
  if (!o.rational.empty()) {
    const auto f = rc::DyadicRational::parse(o.rational);
    const auto which = o.condensed ? rc::MapKind::condensed : rc::MapKind::full;
    const auto rep = rc::dyadic_orbit(f, o.budget.value_or(10'000), which);
    Json j{{"start", f.str()}, {"map", o.condensed ? "condensed" : "full"}, {"found", rep.found},
           {"steps_taken", rep.steps_taken}, {"budget", rep.budget}};
    std::string text = "start " + f.str() + "\n";
    if (rep.found) {
      j["preperiod"] = rep.preperiod;
      j["cycle"] = rational_list_json(rep.cycle);
      text += "preperiod " + std::to_string(rep.preperiod) + "\ncycle " + rational_list_text(rep.cycle) +
              "\nlength " + std::to_string(rep.cycle.size()) + "\n";
    } else {
      text += "no cycle within budget " + std::to_string(rep.budget) + " (inconclusive)\n";
    }
    emit(o, j, text);
    return rep.found ? kOk : kBudget;
  }
  if (o.ring.empty()) rc::fail(rc::Errc::invalid_argument, "orbit needs --ring with --poly or --series, or --rational");
  const rc::Ring ring = rc::parse_ring(o.ring);
  if (!o.series.empty()) {
    const auto f = rc::parse_series(ring, o.series);
    const auto rep = rc::series_orbit(f, o.budget.value_or(rc::kDefaultSeriesBudget));
    Json cyc = Json::array();
    std::string ctext;
    for (const auto& g : rep.cycle) {
      cyc.push_back(rc::series_json(g));
      ctext += (ctext.empty() ? "" : ",") + rc::format_series(g);
    }
    Json j{{"ring", ring.spec()}, {"start", rc::series_json(f)}, {"preperiod", rep.preperiod},
           {"cycle", cyc}, {"parity", rep.parity_trace}, {"steps_taken", rep.steps_taken}};
    emit(o, j,
         "preperiod " + std::to_string(rep.preperiod) + "\ncycle [" + ctext + "]\nlength " +
             std::to_string(rep.cycle.size()) + "\nparity " + rc::format_vector(rep.parity_trace) + "\n");
    return kOk;
  }
  const auto f = rc::parse_poly(ring, o.poly);
  const auto rep = rc::orbit(f, o.budget, o.trace);
  Json j{{"ring", ring.spec()}, {"start", rc::poly_json(f)}, {"found", rep.found()},
         {"steps_taken", rep.steps_taken}, {"budget", rep.budget}};
  std::string text;
  if (rep.found()) {
    j["preperiod"] = rep.preperiod;
    j["cycle"] = poly_list_json(rep.cycle);
    text = "preperiod " + std::to_string(rep.preperiod) + "\ncycle " + poly_list_text(rep.cycle) + "\nlength " +
           std::to_string(rep.cycle.size()) + "\n";
    if (rep.trace) {
      j["trace"] = poly_list_json(*rep.trace);
      text += "trace " + poly_list_text(*rep.trace) + "\n";
    }
  } else {
    text = "no cycle within budget " + std::to_string(rep.budget) + " (inconclusive)\n";
  }
  emit(o, j, text);
  return rep.found() ? kOk : kBudget;
}

int cmd_period(const Options& o) {
  const rc::Ring ring = rc::parse_ring(o.ring);
  const auto f = rc::parse_poly(ring, o.poly);
  Json j{{"ring", ring.spec()}, {"poly", rc::poly_json(f)}};
  if (!rc::is_periodic(f)) {
    j["periodic"] = false;
    emit(o, j, "not periodic\n");
    return kOk;
  }
  const auto period = rc::exact_period(f);
  j["periodic"] = true;
  j["period"] = period;
  std::string text = "period " + std::to_string(period) + "\n";
  if (f.is_odd() && f.degree() >= 1) {
    const mpz_class bound = rc::period_divisor_bound(f);
    const bool unit = ring.is_unit(f.leading());
    j["divisor_bound"] = bound.get_str();
    j["leading_unit"] = unit;
    text += "divisor bound " + bound.get_str() + (unit ? " (attained: leading coefficient is a unit)" : "") + "\n";
  }
  emit(o, j, text);
  return kOk;
}

int cmd_is_periodic(const Options& o) {
  const rc::Ring ring = rc::parse_ring(o.ring);
  const auto f = rc::parse_poly(ring, o.poly);
  Json j{{"ring", ring.spec()}, {"poly", rc::poly_json(f)}};
  if (ring.characteristic() == 0) {
    const auto cls = rc::char_zero_classify(f);
    const char* name = cls == rc::CharZeroClass::on_zero_cycle       ? "on_zero_cycle"
                       : cls == rc::CharZeroClass::on_constant_cycle ? "on_constant_cycle"
                                                                     : "not_periodic";
    j["periodic"] = cls != rc::CharZeroClass::not_periodic;
    j["class"] = name;
    emit(o, j, std::string(name) + "\n");
    return kOk;
  }
  const bool p = rc::is_periodic(f);
  j["periodic"] = p;
  emit(o, j, p ? "periodic\n" : "not periodic\n");
  return kOk;
}

struct CountRow {
  Json json;
  std::string csv;
  enum { none, verified, mismatch, unverified } status = none;
};

const char* status_name(int s) {
  switch (s) {
    case CountRow::verified: return "verified";
    case CountRow::mismatch: return "mismatch";
    case CountRow::unverified: return "unverified";
    default: return "";
  }
}

template <class Oracle>
void attach_oracle(CountRow& row, const Options& o, const mpz_class& expected, Oracle oracle) {
  if (!o.verify) return;
  try {
    const mpz_class got = oracle();
    row.status = got == expected ? CountRow::verified : CountRow::mismatch;
    row.json["oracle"] = got.get_str();
  } catch (const rc::Error& e) {
    if (e.code() != rc::Errc::budget_exceeded && e.code() != rc::Errc::cap_exceeded) throw;
    row.status = CountRow::unverified;
  }
  row.json["status"] = status_name(row.status);
  row.csv += std::string(",") + status_name(row.status);
}

int cmd_count(const Options& o) {
  const std::uint64_t work = o.budget.value_or(rc::work_budget_from_env());
  std::vector<CountRow> rows;
  std::string header;
  if (o.domain == "fq") {
    const rc::Ring field = rc::Ring::galois_field(o.q);
    const std::int64_t p = field.prime();
    const auto [lo, hi] = parse_range(o.k_range.empty() ? "0..1" : o.k_range);
    header = "k,length,count";
    std::int64_t pk = 1;
    for (std::uint64_t k = 0; k < lo; ++k) pk *= p;
    for (std::uint64_t k = lo; k <= hi; ++k, pk *= p) {
      const mpz_class n = rc::count_cycles_formula(o.q, p, static_cast<int>(k));
      const auto len = 2 * static_cast<std::uint64_t>(pk);
      CountRow row{Json{{"k", k}, {"length", len}, {"count", n.get_str()}},
                   std::to_string(k) + "," + std::to_string(len) + "," + n.get_str()};
      attach_oracle(row, o, n, [&] {
        const rc::CensusTable t = k == 0 ? rc::brute_force_census(field, 0, work)
                                         : rc::matrix_census(field, static_cast<int>(k), rc::kMatrixSizeCap, work);
        return mpz_class(static_cast<unsigned long>(t.count(len)));
      });
      rows.push_back(std::move(row));
    }
  } else if (o.domain == "series") {
    const auto [lo, hi] = parse_range(o.n_range.empty() ? "1..10" : o.n_range);
    if (lo < 1) rc::fail(rc::Errc::invalid_argument, "n must be >= 1");
    header = "n,e,j,i,Z";
    for (const auto& r : rc::count_ledger(o.q, lo, hi).rows) {
      CountRow row{Json{{"n", r.n}, {"e", r.e.get_str()}, {"j", r.j.get_str()}, {"i", r.i.get_str()},
                        {"Z", r.z.get_str()}},
                   std::to_string(r.n) + "," + r.e.get_str() + "," + r.j.get_str() + "," + r.i.get_str() + "," +
                       r.z.get_str()};
      attach_oracle(row, o, r.z, [&] {
        const auto c = rc::omega_census(rc::Ring::galois_field(o.q), r.n, work);
        if (c.omega_size != r.j) return mpz_class(-1);
        return mpz_class(static_cast<unsigned long>(c.cycles.size()));
      });
      rows.push_back(std::move(row));
    }
  } else if (o.domain == "z2") {
    const auto [lo, hi] = parse_range(o.n_range.empty() ? "1..5" : o.n_range);
    if (lo < 1) rc::fail(rc::Errc::invalid_argument, "n must be >= 1");
    header = o.condensed ? "n,I" : "n,Z";
    for (std::uint64_t n = lo; n <= hi; ++n) {
      const mpz_class c = o.condensed ? rc::condensed_cycle_count(n) : rc::z2_cycle_count(n);
      CountRow row{Json{{"n", n}, {o.condensed ? "I" : "Z", c.get_str()}}, std::to_string(n) + "," + c.get_str()};
      attach_oracle(row, o, c, [&] {
        const auto size = o.condensed ? rc::enumerate_z2_condensed_cycles(n, work).size()
                                      : rc::enumerate_z2_cycles(n, work).size();
        return mpz_class(static_cast<unsigned long>(size));
      });
      rows.push_back(std::move(row));
    }
  } else {
    rc::fail(rc::Errc::invalid_argument, "count domain must be fq, series or z2");
  }

  Json arr = Json::array();
  std::string text = header + (o.verify ? ",status" : "") + "\n";
  bool mismatch = false, unverified = false;
  for (const auto& r : rows) {
    arr.push_back(r.json);
    text += r.csv + "\n";
    mismatch = mismatch || r.status == CountRow::mismatch;
    unverified = unverified || r.status == CountRow::unverified;
  }
  emit(o, Json{{"domain", o.domain}, {"rows", arr}}, text);
  if (mismatch) return kVerifyFailed;
  if (unverified && o.strict) return kBudget;
  return kOk;
}

int cmd_census(const Options& o) {
  const rc::Ring ring = rc::parse_ring(o.ring);
  const std::uint64_t work = o.budget.value_or(rc::work_budget_from_env());
  if (o.dump_matrices) {
    const int k = o.matrix_k.value_or(1);
    const auto m = rc::build_matrices(ring.prime(), k);
    emit(o, Json{{"p", m.p}, {"k", m.k}, {"B", rc::matrix_json(m.b)}, {"A", rc::matrix_json(m.a)}},
         "B " + rc::matrix_json(m.b).dump() + "\nA " + rc::matrix_json(m.a).dump() + "\n");
    return kOk;
  }
  const rc::CensusTable t = o.matrix_k ? rc::matrix_census(ring, *o.matrix_k, rc::kMatrixSizeCap, work)
                                       : rc::brute_force_census(ring, o.degree, work);
  if (o.json) {
    std::cout << rc::census_json(t).dump(2) << '\n';
  } else {
    std::cout << rc::to_csv(t);
  }
  return kOk;
}

int cmd_construct(const Options& o) {
  const rc::ParityVector v = rc::parse_vector(o.vec);
  const auto which = o.condensed ? rc::MapKind::condensed : rc::MapKind::full;
  if (!o.condensed && !rc::is_cyclically_zero_dense(v)) {
    rc::fail(rc::Errc::invalid_argument,
             "vector " + rc::format_vector(v) +
                 " is not cyclically zero dense, so no point has it as a full-map parity vector; "
                 "use --condensed for the condensed map");
  }
  if (o.domain == "z2") {
    const auto f = o.condensed ? rc::periodic_from_parity_z2(v) : rc::periodic_from_cyclic_parity_z2(v);
    const auto back = rc::z2_parity_vector(f, v.size(), which);
    const auto rep = rc::dyadic_orbit(f, 8 * v.size() + 8);
    Json j{{"point", f.str()}, {"map", o.condensed ? "condensed" : "full"}, {"vector", v},
           {"rederived", back}, {"match", back == v}, {"cycle", rational_list_json(rep.cycle)}};
    emit(o, j,
         f.str() + "\nparity " + rc::format_vector(back) + (back == v ? " (matches)" : " (MISMATCH)") + "\ncycle " +
             rational_list_text(rep.cycle) + " of length " + std::to_string(rep.cycle.size()) + "\n");
    return back == v ? kOk : kVerifyFailed;
  }
  if (o.domain == "series") {
    const rc::Ring ring = rc::parse_ring(o.ring);
    for (auto& c : v) {
      if (c < 0 || !ring.cardinality() || c >= *ring.cardinality()) {
        rc::fail(rc::Errc::invalid_argument, "vector entries must be element codes of " + ring.spec());
      }
    }
    const auto f = o.condensed ? rc::periodic_from_parity(ring, v) : rc::periodic_from_cyclic_parity(ring, v);
    const auto back = rc::parity_vector(f, v.size(), which);
    Json j{{"series", rc::series_json(f)}, {"map", o.condensed ? "condensed" : "full"}, {"vector", v},
           {"rederived", back}, {"match", back == v}};
    emit(o, j,
         rc::format_series(f) + "\nparity " + rc::format_vector(back) + (back == v ? " (matches)" : " (MISMATCH)") +
             "\n");
    return back == v ? kOk : kVerifyFailed;
  }
  rc::fail(rc::Errc::invalid_argument, "construct domain must be series or z2");
}

int cmd_parity(const Options& o) {
  const auto which = o.condensed ? rc::MapKind::condensed : rc::MapKind::full;
  const std::size_t n = o.n_range.empty() ? 8 : parse_range(o.n_range).second;
  if (!o.rational.empty()) {
    const auto f = rc::DyadicRational::parse(o.rational);
    const auto v = rc::z2_parity_vector(f, n, which);
    emit(o, Json{{"start", f.str()}, {"parity", v}}, rc::format_vector(v) + "\n");
    return kOk;
  }
  if (!o.series.empty() || !o.poly.empty()) {
    const rc::Ring ring = rc::parse_ring(o.ring);
    const auto f = o.series.empty() ? rc::RationalSeries(rc::parse_poly(ring, o.poly)) : rc::parse_series(ring, o.series);
    const auto v = rc::parity_vector(f, n, which);
    emit(o, Json{{"start", rc::series_json(f)}, {"parity", v}}, rc::format_vector(v) + "\n");
    return kOk;
  }
  const auto v = rc::parse_vector(o.vec);
  Json j{{"vector", v},
         {"zero_dense", rc::is_zero_dense(v)},
         {"cyclically_zero_dense", rc::is_cyclically_zero_dense(v)},
         {"expand", rc::expand(v)},
         {"least_rotation", rc::min_rotation(v)},
         {"primitive_period", rc::primitive_period(v)}};
  std::string text = "zero dense " + std::string(rc::is_zero_dense(v) ? "yes" : "no") + "\ncyclically zero dense " +
                     (rc::is_cyclically_zero_dense(v) ? "yes" : "no") + "\nexpand " +
                     rc::format_vector(rc::expand(v)) + "\n";
  if (rc::is_zero_dense(v) && v.back() == 0) {
    j["condense"] = rc::condense(v);
    text += "condense " + rc::format_vector(rc::condense(v)) + "\n";
  }
  text += "least rotation " + rc::format_vector(rc::min_rotation(v)) + "\nprimitive period " +
          std::to_string(rc::primitive_period(v)) + "\n";
  emit(o, j, text);
  return kOk;
}

mpz_class parse_nonneg(const std::string& s) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
    rc::fail(rc::Errc::parse_error, "expected a non-negative integer: '" + s + "'");
  }
  return mpz_class(s, 10);
}

int cmd_valuation(const Options& o) {
  if (o.digits) {
    const auto f = rc::DyadicRational::parse(o.rational);
    const auto d = rc::dyadic_digits(f, *o.digits);
    std::string text = "[";
    for (std::size_t i = 0; i < d.size(); ++i) text += (i ? "," : "") + std::to_string(d[i]);
    emit(o, Json{{"value", f.str()}, {"digits", d}}, text + "]\n");
    return kOk;
  }
  if (o.characteristic) {
    if (!o.val_n) rc::fail(rc::Errc::invalid_argument, "threshold needs --n");
    const auto n = parse_nonneg(*o.val_n);
    if (n < 1 || !n.fits_ulong_p()) rc::fail(rc::Errc::invalid_argument, "threshold needs 1 <= n < 2^64");
    const auto cf = rc::characteristic_factorization(rc::Ring::zmod(*o.characteristic));
    const mpz_class k = rc::threshold_constant(cf, n.get_ui());
    emit(o, Json{{"char", *o.characteristic}, {"n", n.get_str()}, {"K", k.get_str()}}, k.get_str() + "\n");
    return kOk;
  }
  if (!o.p || !o.val_n) rc::fail(rc::Errc::invalid_argument, "valuation needs --p and --n (and optionally --m)");
  if (!rc::is_prime(*o.p)) rc::fail(rc::Errc::not_prime, std::to_string(*o.p) + " is not prime");
  const auto n = parse_nonneg(*o.val_n);
  if (o.val_m) {
    const auto m = parse_nonneg(*o.val_m);
    if (m > n) rc::fail(rc::Errc::invalid_argument, "binomial valuation needs m <= n");
    const auto v = rc::binom_valuation(*o.p, n, m);
    emit(o, Json{{"p", *o.p}, {"n", n.get_str()}, {"m", m.get_str()}, {"valuation", v}}, std::to_string(v) + "\n");
    return kOk;
  }
  const auto v = rc::vp(*o.p, n);
  emit(o, Json{{"p", *o.p}, {"n", n.get_str()}, {"valuation", v}}, std::to_string(v) + "\n");
  return kOk;
}

int cmd_verify(const Options& o) {
  std::vector<std::string> names;
  if (o.suite == "all") {
    names = rc::suite_names();
  } else {
    names.push_back(o.suite);
  }
  Json arr = Json::array();
  std::string text;
  bool ok = true;
  for (const auto& name : names) {
    const auto rep = rc::run_suite(name, o.seed);
    ok = ok && rep.passed();
    Json checks = Json::array();
    text += std::string(rep.passed() ? "PASS " : "FAIL ") + name + "\n";
    for (const auto& c : rep.checks) {
      checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      text += std::string(c.passed ? "  ok   " : "  FAIL ") + c.name + ": " + c.detail + "\n";
    }
    arr.push_back(Json{{"suite", name}, {"passed", rep.passed()}, {"seconds", rep.seconds}, {"checks", checks}});
  }
  emit(o, Json{{"seed", o.seed}, {"suites", arr}, {"passed", ok}}, text);
  return ok ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Collatz-type dynamics over rings, power series and the 2-adic integers"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Emit JSON instead of text")->configurable(false);
  app.add_option("--seed", o.seed, "Seed for randomized checks");
  app.add_option("--budget", o.budget, "Step or work budget");
  auto fall = [](CLI::App* s) { s->fallthrough(); };

  auto* orbit = app.add_subcommand("orbit", "Iterate T until a cycle is found");
  fall(orbit);
  orbit->add_option("--ring", o.ring, "Coefficient ring, e.g. F2, Z/6, F4, F2[t], Z");
  orbit->add_option("--poly", o.poly, "Polynomial [c0,c1,...]");
  orbit->add_option("--series", o.series, "Series {u:[...],v:[...]}");
  orbit->add_option("--rational", o.rational, "2-adic rational a/b with b odd");
  orbit->add_flag("--condensed", o.condensed, "Use the condensed map (rationals)");
  orbit->add_flag("--trace", o.trace, "Print the full trace");

  auto* period = app.add_subcommand("period", "Exact period of a periodic polynomial");
  fall(period);
  period->add_option("--ring", o.ring)->required();
  period->add_option("--poly", o.poly)->required();

  auto* isp = app.add_subcommand("is-periodic", "Decide whether a polynomial lies on a cycle");
  fall(isp);
  isp->add_option("--ring", o.ring)->required();
  isp->add_option("--poly", o.poly)->required();

  auto* count = app.add_subcommand("count", "Closed-form cycle counts");
  fall(count);
  count->add_option("domain", o.domain, "fq, series or z2")->required();
  count->add_option("--q", o.q, "Field or alphabet size");
  count->add_option("--k", o.k_range, "Exponent or range a..b (fq)");
  count->add_option("--n", o.n_range, "Length or range a..b");
  count->add_flag("--condensed", o.condensed, "Count condensed-map cycles (z2)");
  count->add_flag("--verify", o.verify, "Compare each row with enumeration");
  count->add_flag("--strict", o.strict, "Exit 2 when a row could not be verified");

  auto* census = app.add_subcommand("census", "Tabulate cycles by length");
  fall(census);
  census->add_option("--ring", o.ring)->required();
  census->add_option("--degree", o.degree, "Degree cap for the exhaustive scan");
  census->add_option("--matrix", o.matrix_k, "Use the matrix enumeration with exponent k");
  census->add_flag("--dump-matrices", o.dump_matrices, "Print the triangular matrix pair");

  auto* construct = app.add_subcommand("construct", "Build the periodic point with a given parity vector");
  fall(construct);
  construct->add_option("domain", o.domain, "series or z2")->required();
  construct->add_option("--ring", o.ring);
  construct->add_option("--vec,--bits", o.vec, "Parity vector, [a,b,...] or a digit string")->required();
  construct->add_flag("--condensed", o.condensed, "Vector is a condensed-map parity vector");

  auto* parity = app.add_subcommand("parity", "Parity vectors and their combinatorics");
  fall(parity);
  parity->add_option("--ring", o.ring);
  parity->add_option("--poly", o.poly);
  parity->add_option("--series", o.series);
  parity->add_option("--rational", o.rational);
  parity->add_option("--vec", o.vec, "Inspect a vector");
  parity->add_option("--n", o.n_range, "Number of iterates");
  parity->add_flag("--condensed", o.condensed);

  auto* val = app.add_subcommand("valuation", "p-adic valuations, thresholds and 2-adic digits");
  fall(val);
  val->add_option("--p", o.p, "Prime");
  val->add_option("--n", o.val_n);
  val->add_option("--m", o.val_m, "Binomial lower index");
  val->add_option("--char", o.characteristic, "Characteristic for the threshold constant");
  val->add_option("--rational", o.rational);
  val->add_option("--digits", o.digits, "Number of 2-adic digits");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  fall(verify);
  verify->add_option("suite", o.suite, "Suite name or 'all'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (orbit->parsed()) return cmd_orbit(o);
    if (period->parsed()) return cmd_period(o);
    if (isp->parsed()) return cmd_is_periodic(o);
    if (count->parsed()) return cmd_count(o);
    if (census->parsed()) return cmd_census(o);
    if (construct->parsed()) return cmd_construct(o);
    if (parity->parsed()) return cmd_parity(o);
    if (val->parsed()) return cmd_valuation(o);
    if (verify->parsed()) {
      if (o.suite != "all") {
        const auto& names = rc::suite_names();
        if (std::find(names.begin(), names.end(), o.suite) == names.end()) {
          std::string list;
          for (const auto& n : names) list += " " + n;
          std::cerr << "error: unknown suite '" << o.suite << "'; available: all" << list << '\n';
          return kUsage;
        }
      }
      return cmd_verify(o);
    }
  } catch (const rc::Error& e) {
    std::cerr << "error (" << rc::to_string(e.code()) << "): " << e.what() << '\n';
    switch (e.code()) {
      case rc::Errc::budget_exceeded:
      case rc::Errc::cap_exceeded:
        return kBudget;
      case rc::Errc::internal:
        return kVerifyFailed;
      default:
        return kUsage;
    }
  }
  return kUsage;
}
