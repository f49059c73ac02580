// Copyright 2026 The qtcluster Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qtcluster/acceptance.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <random>
#include <regex>
#include <sstream>

#include "qtcluster/compat.hpp"
#include "qtcluster/errors.hpp"
#include "qtcluster/qcluster.hpp"
#include "qtcluster/render.hpp"
#include "qtcluster/repchar.hpp"

#ifndef QTCLUSTER_GOLDEN_DIR
#define QTCLUSTER_GOLDEN_DIR "tests/golden"
#endif

namespace qtcluster {

std::string default_golden_dir() { return QTCLUSTER_GOLDEN_DIR; }

IntMatrix load_matrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot read golden file " + path);
  std::vector<std::vector<std::int64_t>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream is(line);
    std::vector<std::int64_t> row;
    std::string tok;
    while (is >> tok) {
      std::size_t used = 0;
      std::int64_t x = 0;
      try {
        x = std::stoll(tok, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != tok.size()) throw DomainError("bad entry '" + tok + "' in golden file " + path);
      row.push_back(x);
    }
    if (!row.empty()) rows.push_back(std::move(row));
  }
  try {
    return IntMatrix::from_rows(rows);
  } catch (const Error& e) {
    throw DomainError("malformed golden file " + path + ": " + e.what());
  }
}

LaurentPolynomial parse_z_polynomial(const std::string& text) {
  static const std::regex factor_re(R"(z_\{(-?\d+),(-?\d+)\}(?:\^\{(-?\d+)\})?)");
  LaurentPolynomial out;
  std::stringstream ss(text);
  std::string term;
  while (std::getline(ss, term, '+')) {
    std::int64_t coeff = 1;
    ExpVector e;
    std::smatch m;
    std::string rest = term;
    rest.erase(0, rest.find_first_not_of(" \t"));
    std::size_t digits = 0;
    while (digits < rest.size() && std::isdigit(static_cast<unsigned char>(rest[digits]))) ++digits;
    if (digits) {
      coeff = std::stoll(rest.substr(0, digits));
      rest = rest.substr(digits);
    }
    while (std::regex_search(rest, m, factor_re)) {
      for (char ch : m.prefix().str()) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
          throw DomainError("cannot parse term '" + term + "'");
        }
      }
      e.add({std::stoi(m[1]), std::stoi(m[2])}, m[3].matched ? std::stoll(m[3]) : 1);
      rest = m.suffix();
    }
    if (rest.find_first_not_of(" \t") != std::string::npos) {
      throw DomainError("cannot parse term '" + term + "'");
    }
    out.add_term(e, coeff);
  }
  return out;
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Sweep {
  std::size_t cases = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++cases;
    if (ok) return;
    if (failures++ == 0) first_failure = what;
  }
  std::string summary(const std::string& label) const {
    std::string s = label + " " + std::to_string(cases - failures) + "/" +
                    std::to_string(cases);
    if (failures) s += " (first failure: " + first_failure + ")";
    return s;
  }
};

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

// Criterion 1

CriterionResult criterion_cartan_series() {
  CriterionResult res{1, "quantum Cartan series", false, 0, 1.0, ""};
  auto start = Clock::now();
  CartanData a1 = build_cartan(DynkinType::A, 1);
  CartanData a2 = build_cartan(DynkinType::A, 2);
  std::vector<std::int64_t> got11, gotii, gotij;
  for (int m = 0; m <= 11; ++m) got11.push_back(a1.ctilde(1, 1, m));
  for (int m = 0; m <= 14; ++m) {
    gotii.push_back(a2.ctilde(1, 1, m));
    gotij.push_back(a2.ctilde(1, 2, m));
  }
  bool a2_sym = true;
  for (int m = 0; m <= 14; ++m) {
    a2_sym = a2_sym && a2.ctilde(2, 2, m) == gotii[static_cast<std::size_t>(m)] &&
             a2.ctilde(2, 1, m) == gotij[static_cast<std::size_t>(m)];
  }
  res.millis = elapsed_ms(start);

  // z - z^3 + z^5 - z^7 + z^9 - z^11
  const std::vector<std::int64_t> want11{0, 1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1};
  // z - z^5 + z^7 - z^11 + z^13
  const std::vector<std::int64_t> wantii{0, 1, 0, 0, 0, -1, 0, 1, 0, 0, 0, -1, 0, 1, 0};
  // z^2 - z^4 + z^8 - z^10 + z^14
  const std::vector<std::int64_t> wantij{0, 0, 1, 0, -1, 0, 0, 0, 1, 0, -1, 0, 0, 0, 1};
  std::vector<std::string> bad;
  if (got11 != want11) bad.push_back("A1 C~11");
  if (gotii != wantii) bad.push_back("A2 C~ii");
  if (gotij != wantij) bad.push_back("A2 C~ij");
  if (!a2_sym) bad.push_back("A2 node symmetry");
  res.pass = bad.empty() && res.millis < res.limit_ms;
  res.detail = bad.empty() ? "A1 through z^11, A2 through z^14 exact"
                           : "mismatch: " + join(bad, ", ");
  return res;
}

// Criterion 2

CriterionResult criterion_d4_golden(const AcceptanceOptions& opt) {
  CriterionResult res{2, "D4 golden matrices", false, 0, 10.0, ""};
  const std::vector<std::string> files{"d4_btilde.txt", "d4_lambda.txt",
                                       "d4_btilde_t_lambda.txt"};
  std::vector<IntMatrix> golden;
  for (const auto& f : files) {
    try {
      golden.push_back(load_matrix(opt.golden_dir + "/" + f));
    } catch (const Error& e) {
      res.detail = e.what();
      return res;
    }
  }
  auto start = Clock::now();
  CartanData d4 = build_cartan(DynkinType::D, 4);
  QuiverSlice slice = build_slice(d4, Window{-5, 2});
  IntMatrix lambda = build_lambda(slice);
  IntMatrix product = slice.exchange().b.transpose() * lambda;
  res.millis = elapsed_ms(start);

  std::vector<std::string> bad;
  if (slice.exchange().b != golden[0]) bad.push_back(files[0]);
  if (lambda != golden[1]) bad.push_back(files[1]);
  if (product != golden[2]) bad.push_back(files[2]);
  res.pass = bad.empty() && res.millis < res.limit_ms;
  res.detail = bad.empty() ? "B~ 16x8, Lambda 16x16 and B~^T Lambda 8x16 match"
                           : "differs from " + join(bad, ", ");
  return res;
}

// Criterion 3

bool is_minus_two_identity(const ExchangeMatrix& b, const IntMatrix& lambda) {
  CompatReport r = check_compatible(b, lambda);
  if (!r.compatible() || !r.constant_diagonal()) return false;
  return r.diagonal.front() == -2;
}

struct TypeRank {
  DynkinType type;
  int rank;
};

const std::vector<TypeRank>& sweep_types() {
  static const std::vector<TypeRank> types{
      {DynkinType::A, 1}, {DynkinType::A, 2}, {DynkinType::A, 3},
      {DynkinType::A, 4}, {DynkinType::A, 5}, {DynkinType::D, 4},
      {DynkinType::D, 5}, {DynkinType::E, 6}};
  return types;
}

CriterionResult criterion_compat_sweep(const AcceptanceOptions& opt) {
  CriterionResult res{3, "compatibility sweep", false, 0, 5000.0, ""};
  auto start = Clock::now();
  Sweep slices, random;
  for (const auto& [type, rank] : sweep_types()) {
    CartanData c = build_cartan(type, rank);
    for (int n = 1; n <= 3; ++n) {
      QuiverSlice s = build_slice(c, n);
      slices.record(is_minus_two_identity(s.exchange(), build_lambda(s)),
                    c.label() + " N=" + std::to_string(n));
    }
  }
  std::mt19937_64 rng(opt.seed);
  const int runs = 100;
  for (int run = 0; run < runs; ++run) {
    const auto& tr = sweep_types()[rng() % sweep_types().size()];
    CartanData c = build_cartan(tr.type, tr.rank);
    QuiverSlice s = build_slice(c, 1 + static_cast<int>(rng() % 3));
    ExchangeMatrix b = s.exchange();
    IntMatrix lambda = build_lambda(s);
    const int len = 1 + static_cast<int>(rng() % 12);
    bool ok = true;
    for (int step = 0; step < len && ok; ++step) {
      std::size_t k = rng() % b.cols();
      lambda = mutate_lambda(lambda, b, k);
      b = mutate_matrix(b, k);
      ok = is_minus_two_identity(b, lambda);
    }
    random.record(ok, c.label() + " run " + std::to_string(run));
  }
  res.millis = elapsed_ms(start);
  res.pass = slices.failures == 0 && random.failures == 0 && res.millis < res.limit_ms;
  res.detail = slices.summary("slices") + "; " + random.summary("random mutation runs");
  return res;
}

// Criterion 4

CriterionResult criterion_sl3_classical() {
  CriterionResult res{4, "classical sl3 mutation", false, 0, 100.0, ""};
  struct Reference {
    std::string label;
    std::size_t steps;
    std::string text;
  };
  // Reference cluster variables for g = sl3 along (1,4) (1,2) (2,3) (2,1) (1,4).
  const std::vector<Reference> reference{
      {"z(1)_{1,4}", 1, "z_{1,2}z_{1,4}^{-1}z_{2,5} + z_{1,4}^{-1}z_{1,6}z_{2,3}"},
      {"z(1)_{1,2}", 2,
       "z_{1,0}z_{1,4}^{-1}z_{2,5} + z_{1,0}z_{1,2}^{-1}z_{1,4}^{-1}z_{1,6}z_{2,3} + "
       "z_{1,2}^{-1}z_{1,6}z_{2,-1}"},
      {"z(1)_{2,3}", 3,
       "z_{2,1}z_{2,3}^{-1} + z_{1,2}z_{1,4}^{-1}z_{2,5}z_{2,3}^{-1} + z_{1,4}^{-1}z_{1,6}"},
      {"z(2)_{1,4}", 5,
       "z_{1,0}z_{1,2}^{-1} + z_{1,2}^{-1}z_{1,4}z_{2,1}z_{2,3}^{-1} + z_{2,3}^{-1}z_{2,5}"},
  };
  const std::vector<Vertex> path{{1, 4}, {1, 2}, {2, 3}, {2, 1}, {1, 4}};

  auto start = Clock::now();
  CartanData a2 = build_cartan(DynkinType::A, 2);
  QuiverSlice slice = build_slice(a2, Window{-1, 6});
  std::vector<LaurentPolynomial> classical, quantum;
  QuantumSeed seed = initial_seed(slice);
  for (const auto& p : reference) {
    std::vector<Vertex> prefix(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(p.steps));
    classical.push_back(classical_mutate_along(slice, prefix).at(prefix.back()));
    quantum.push_back(evaluate_t1(mutate_along(seed, prefix).var(prefix.back())));
  }
  res.millis = elapsed_ms(start);

  std::vector<std::string> bad;
  std::size_t matched = 0;
  for (std::size_t k = 0; k < reference.size(); ++k) {
    LaurentPolynomial want = parse_z_polynomial(reference[k].text);
    bool c_ok = classical[k] == want, q_ok = quantum[k] == want;
    if (c_ok && q_ok) {
      ++matched;
      continue;
    }
    std::vector<std::string> why;
    if (!c_ok) why.push_back("classical - reference = " + to_string(classical[k] - want));
    if (!q_ok) why.push_back("quantum at t=1 differs from reference");
    if (quantum[k] == classical[k]) why.push_back("quantum at t=1 equals classical");
    bad.push_back(reference[k].label + ": " + join(why, ", "));
  }
  res.pass = bad.empty() && res.millis < res.limit_ms;
  res.detail = std::to_string(matched) + "/4 reference variables reproduced";
  if (!bad.empty()) res.detail += "; " + join(bad, "; ");
  return res;
}

// Criterion 5

CriterionResult criterion_sl2_quantum() {
  CriterionResult res{5, "sl2 quantum mutation", false, 0, 0, ""};
  auto start = Clock::now();
  CartanData a1 = build_cartan(DynkinType::A, 1);
  QtCharacter chi = fundamental_qt_character(a1, 1, -2);
  res.millis = elapsed_ms(start);

  TorusElement want =
      TorusElement::monomial(ExpVector{{{1, -2}, 1}, {{1, 0}, -1}}) +
      TorusElement::monomial(ExpVector{{{1, 2}, 1}, {{1, 0}, -1}});
  ExpVector y_low = ExpVector::unit({1, -2});      // Y_{1,q^{-1}}
  ExpVector y_high = ExpVector::unit({1, 0}, -1);  // Y_{1,q}^{-1}
  TorusElement via_j = embed_Y(a1, y_low) + embed_Y(a1, y_high);

  std::vector<std::string> bad;
  if (chi.value != want) bad.push_back("value " + render_text(chi.value));
  if (chi.value.bar() != chi.value) bad.push_back("not bar-invariant");
  if (chi.value != via_j) bad.push_back("differs from J(Y_{1,q^-1} + Y_{1,q}^-1)");
  if (chi.vertex_read != Vertex{1, 0}) bad.push_back("read at " + to_string(chi.vertex_read));
  res.pass = bad.empty();
  res.detail = bad.empty() ? render_text(chi.value) + ", bar-invariant, = J(Y_{1,q^-1} + Y_{1,q}^-1)"
                           : join(bad, "; ");
  return res;
}

// Criterion 6

CriterionResult criterion_sequences() {
  CriterionResult res{6, "mutation sequences", false, 0, 0, ""};
  auto start = Clock::now();
  auto a2 = mutation_sequence(build_cartan(DynkinType::A, 2), 1, 0).sequence;
  auto d4 = mutation_sequence(build_cartan(DynkinType::D, 4), 1, 0).sequence;
  res.millis = elapsed_ms(start);
  const std::vector<Vertex> want_a2 = parse_path("(1,4) (1,2) (2,3) (2,1) (1,4)");
  const std::vector<Vertex> want_d4 = parse_path(
      "(1,6) (1,4) (1,2) (3,6) (3,4) (3,2) (4,6) (4,4) (4,2) (2,5) (2,3) (2,1) "
      "(1,6) (1,4) (3,6) (3,4) (4,6) (4,4) (2,5) (2,3) (1,6)");
  std::vector<std::string> bad;
  if (a2 != want_a2) bad.push_back("A2 got " + to_string(a2));
  if (d4 != want_d4) bad.push_back("D4 got " + to_string(d4));
  res.pass = bad.empty();
  res.detail = bad.empty() ? "A2 (5 vertices) and D4 (21 vertices) match" : join(bad, "; ");
  return res;
}

// Criterion 7

struct CharJob {
  CartanData cartan;
  int i;
  int r;
};

std::string check_type_a_character(const CharJob& job) {
  std::string where = job.cartan.label() + " " + to_string(Vertex{job.i, job.r});
  ThinnessReport thin = thinness_flatten_check(job.cartan, job.i, job.r);
  const TorusElement& value = thin.character.value;
  if (!thin.pass) return where + ": " + thin.detail;
  if (value.bar() != value) return where + ": not bar-invariant";
  LaurentPolynomial oracle = embed_Y(job.cartan, classical_fm_qchar(job.cartan, job.i, job.r));
  if (evaluate_t1(value) != oracle) return where + ": t=1 image differs from the oracle";
  for (const auto& [m, c] : oracle.terms()) {
    if (c != 1) return where + ": oracle multiplicity " + std::to_string(c);
  }
  return "";
}

std::vector<std::string> run_jobs(const std::vector<CharJob>& jobs, unsigned threads,
                                  const std::function<std::string(const CharJob&)>& fn) {
  std::vector<std::string> out(jobs.size());
  threads = std::max(1u, threads);
  if (threads == 1) {
    for (std::size_t k = 0; k < jobs.size(); ++k) out[k] = fn(jobs[k]);
    return out;
  }
  std::vector<std::future<void>> workers;
  std::atomic<std::size_t> next{0};
  for (unsigned t = 0; t < threads; ++t) {
    workers.push_back(std::async(std::launch::async, [&] {
      for (std::size_t k = next++; k < jobs.size(); k = next++) out[k] = fn(jobs[k]);
    }));
  }
  for (auto& w : workers) w.get();
  return out;
}

CriterionResult criterion_type_a(const AcceptanceOptions& opt) {
  CriterionResult res{7, "type-A theorem", false, 0, 60000.0, ""};
  std::vector<CharJob> jobs;
  const int max_rank = opt.quick ? 3 : 4;
  for (int n = 1; n <= max_rank; ++n) {
    CartanData c = build_cartan(DynkinType::A, n);
    for (int i = 1; i <= n; ++i) {
      // Levels -2 and 0 shifted onto the component containing (1,0).
      for (int r : {-2, 0}) jobs.push_back({c, i, r + c.parity(i)});
    }
  }
  auto start = Clock::now();
  std::vector<std::string> errors;
  try {
    errors = run_jobs(jobs, opt.threads, check_type_a_character);
  } catch (const Error& e) {
    errors = {e.what()};
  }
  res.millis = elapsed_ms(start);
  std::vector<std::string> bad;
  for (auto& e : errors) {
    if (!e.empty()) bad.push_back(e);
  }
  res.pass = bad.empty() && res.millis < res.limit_ms;
  res.detail = std::to_string(jobs.size() - bad.size()) + "/" + std::to_string(jobs.size()) +
               " characters (A1-A" + std::to_string(max_rank) +
               ") thin, bar-invariant and equal to the oracle at t=1";
  if (!bad.empty()) res.detail += "; " + bad.front();
  return res;
}

// Criterion 8

CriterionResult criterion_baxter() {
  CriterionResult res{8, "quantized Baxter relation", false, 0, 0, ""};
  auto start = Clock::now();
  std::vector<std::string> bad;
  const CartanData a1 = build_cartan(DynkinType::A, 1);
  for (int r : {-1, 0, 1}) {
    BaxterReport rep = baxter_check(r);
    for (const auto& c : rep.checks) {
      if (!c.pass) bad.push_back("r=" + std::to_string(r) + " " + c.name);
    }
    // The t = 1 image is z_{1,2r-2} + z_{1,2r+2}.
    QtCharacter chi = fundamental_qt_character(a1, 1, 2 * r - 2);
    LaurentPolynomial lhs = evaluate_t1(QuantumTorus(a1).multiply(
        chi.value, TorusElement::monomial(ExpVector::unit({1, 2 * r}))));
    LaurentPolynomial want = LaurentPolynomial::monomial(ExpVector::unit({1, 2 * r - 2})) +
                             LaurentPolynomial::monomial(ExpVector::unit({1, 2 * r + 2}));
    if (lhs != want) bad.push_back("r=" + std::to_string(r) + " classical image " + to_string(lhs));
  }
  BaxterReport flipped = baxter_check(0, BaxterVariant::SwappedPowers);
  if (flipped.pass()) bad.push_back("swapped t-powers were not rejected");
  res.millis = elapsed_ms(start);
  res.pass = bad.empty();
  res.detail = bad.empty() ? "r in {-1,0,1} exact in the torus, weights balance, t=1 image "
                             "z[1,2r-2] + z[1,2r+2]; swapped powers rejected"
                           : join(bad, "; ");
  return res;
}

// Criterion 9

CriterionResult criterion_drinfeld() {
  CriterionResult res{9, "Drinfeld double", false, 0, 0, ""};
  auto start = Clock::now();
  DrinfeldReport minus = drinfeld_double_check(-1);
  DrinfeldReport plus = drinfeld_double_check(1);
  res.millis = elapsed_ms(start);

  std::size_t rel_ok = 0;
  std::vector<std::string> failing;
  for (const auto& c : minus.checks) {
    if (c.pass) ++rel_ok;
    else failing.push_back(c.name);
  }
  std::vector<std::string> parts;
  parts.push_back("q=-t^{1/2}: " + std::to_string(rel_ok) + "/" +
                  std::to_string(minus.checks.size()) + " relations hold");
  if (!failing.empty()) parts.push_back("failing: " + join(failing, ", "));
  parts.push_back(std::string("q=+t^{1/2} falsification ") +
                  (plus.pass() ? "NOT rejected" : "rejected"));
  parts.push_back("reference Casimir " + minus.reference_casimir.name + ": " +
                  (minus.reference_casimir.pass ? "holds"
                                              : "does not hold, residual " +
                                                    minus.reference_casimir.lhs));
  res.pass = minus.pass() && !plus.pass() && minus.reference_casimir.pass;
  res.detail = join(parts, "; ");
  return res;
}

// Criterion 10

TCoeff random_coeff(std::mt19937_64& rng) {
  TCoeff c;
  const int terms = 1 + static_cast<int>(rng() % 2);
  for (int k = 0; k < terms; ++k) {
    std::int64_t a = static_cast<std::int64_t>(rng() % 7) - 3;
    c += TCoeff::monomial(a == 0 ? 1 : a, static_cast<int>(rng() % 7) - 3);
  }
  return c.is_zero() ? TCoeff::one() : c;
}

TorusElement random_element(std::mt19937_64& rng, const std::vector<Vertex>& pool,
                            std::size_t max_terms) {
  TorusElement out;
  const std::size_t terms = 1 + rng() % max_terms;
  for (std::size_t t = 0; t < terms; ++t) {
    ExpVector e;
    const std::size_t factors = rng() % 4;
    for (std::size_t f = 0; f < factors; ++f) {
      e.add(pool[rng() % pool.size()], static_cast<std::int64_t>(rng() % 5) - 2);
    }
    out.add_term(e, random_coeff(rng));
  }
  return out.is_zero() ? TorusElement::unit() : out;
}

CriterionResult criterion_properties(const AcceptanceOptions& opt) {
  CriterionResult res{10, "property suites", false, 0, 0, ""};
  auto start = Clock::now();
  std::mt19937_64 rng(opt.seed);
  const std::size_t cases = opt.quick ? 50 : 200;

  const CartanData a3 = build_cartan(DynkinType::A, 3);
  const QuantumTorus torus(a3);
  const std::vector<Vertex> pool = build_slice(a3, 2).vertices();

  Sweep assoc, bar_anti, t1_hom, weight_hom, division;
  for (std::size_t k = 0; k < cases; ++k) {
    TorusElement a = random_element(rng, pool, 5), b = random_element(rng, pool, 5),
                 c = random_element(rng, pool, 5);
    assoc.record(torus.multiply(torus.multiply(a, b), c) ==
                     torus.multiply(a, torus.multiply(b, c)),
                 render_text(a));
    bar_anti.record(torus.multiply(a, b).bar() == torus.multiply(b.bar(), a.bar()),
                    render_text(a));
    t1_hom.record(evaluate_t1(torus.multiply(a, b)) == evaluate_t1(a) * evaluate_t1(b),
                  render_text(a));
    weight_hom.record(weight_character(a3, torus.multiply(a, b)) ==
                          weight_character(a3, a) * weight_character(a3, b),
                      render_text(a));
    TorusElement d = random_element(rng, pool, 3), x = random_element(rng, pool, 4);
    bool ok = false;
    try {
      ok = torus.exact_left_divide(torus.multiply(d, x), d) == x;
    } catch (const Error&) {
      ok = false;
    }
    division.record(ok, render_text(d));
  }

  Sweep involution, factorisation;
  for (std::size_t k = 0; k < cases; ++k) {
    const auto& tr = sweep_types()[rng() % sweep_types().size()];
    CartanData c = build_cartan(tr.type, tr.rank);
    QuiverSlice s = build_slice(c, 1 + static_cast<int>(rng() % 3));
    ExchangeMatrix b = s.exchange();
    for (int pre = static_cast<int>(rng() % 4); pre > 0; --pre) {
      b = mutate_matrix(b, rng() % b.cols());
    }
    std::size_t dir = rng() % b.cols();
    std::string where = c.label() + " " + to_string(s.window());
    involution.record(mutate_matrix(mutate_matrix(b, dir), dir) == b, where);
    factorisation.record(mutate_matrix(b, dir).b == e_matrix(b, dir) * b.b * f_matrix(b, dir),
                         where);
  }

  Sweep quantum_involution;
  for (const auto& [type, rank, window] :
       std::vector<std::tuple<DynkinType, int, Window>>{{DynkinType::A, 1, {-3, 2}},
                                                         {DynkinType::A, 2, {-1, 6}},
                                                         {DynkinType::D, 4, {-5, 2}}}) {
    QuiverSlice s = build_slice(build_cartan(type, rank), window);
    QuantumSeed seed = initial_seed(s);
    for (const Vertex& k : s.exchangeable()) {
      QuantumSeed back = mutate(mutate(seed, k), k);
      bool same = true;
      for (std::size_t row = 0; row < seed.size(); ++row) {
        same = same && back.var_at(row) == seed.var_at(row);
      }
      same = same && back.lambda() == seed.lambda() && back.b() == seed.b();
      quantum_involution.record(same, s.cartan().label() + " at " + to_string(k));
    }
  }

  Sweep eqfn;
  std::vector<TypeRank> all_types;
  for (int n = 1; n <= 8; ++n) all_types.push_back({DynkinType::A, n});
  for (int n = 4; n <= 8; ++n) all_types.push_back({DynkinType::D, n});
  for (int n = 6; n <= 8; ++n) all_types.push_back({DynkinType::E, n});
  for (const auto& [type, rank] : all_types) {
    CartanData c = build_cartan(type, rank);
    for (int i = 1; i <= rank; ++i) {
      for (int j = 1; j <= rank; ++j) {
        for (int m = 1; m <= 40; ++m) {
          std::int64_t lhs = 2 * c.f_form(i, j, m) - c.f_form(i, j, m + 2) -
                             c.f_form(i, j, m - 2);
          eqfn.record(lhs == c.n_form(i, j, m),
                      c.label() + " (" + std::to_string(i) + "," + std::to_string(j) +
                          ") m=" + std::to_string(m));
        }
      }
    }
  }

  // Every variable produced along the character sequences and a batch of
  // random paths; mutate() itself rejects violations, the sweep re-checks.
  Sweep positivity;
  auto scan = [&](const QuiverSlice& s, const std::vector<Vertex>& path) {
    QuantumSeed seed = initial_seed(s);
    for (const Vertex& k : path) {
      try {
        seed = mutate(seed, k);
      } catch (const Error& e) {
        positivity.record(false, e.what());
        return;
      }
      positivity.record(check_variable(seed.var(k)).ok(),
                        s.cartan().label() + " at " + to_string(k));
    }
  };
  const int seq_rank = opt.quick ? 3 : 4;
  for (int n = 1; n <= seq_rank; ++n) {
    CartanData c = build_cartan(DynkinType::A, n);
    for (int i = 1; i <= n; ++i) {
      int r = c.parity(i);
      scan(build_slice(c, default_window(c, i, r)), mutation_sequence(c, i, r).sequence);
    }
  }
  {
    CartanData d4 = build_cartan(DynkinType::D, 4);
    scan(build_slice(d4, default_window(d4, 1, 0)), mutation_sequence(d4, 1, 0).sequence);
  }
  for (std::size_t k = 0; k < (opt.quick ? 10u : 40u); ++k) {
    CartanData c = build_cartan(DynkinType::A, 1 + static_cast<int>(rng() % 3));
    QuiverSlice s = build_slice(c, 1 + static_cast<int>(rng() % 2));
    std::vector<Vertex> ex = s.exchangeable(), path;
    for (std::size_t step = 1 + rng() % 5; step > 0; --step) path.push_back(ex[rng() % ex.size()]);
    scan(s, path);
  }

  res.millis = elapsed_ms(start);
  std::vector<const Sweep*> all{&assoc,         &bar_anti,   &t1_hom,    &weight_hom,
                                &division,      &involution, &factorisation,
                                &quantum_involution, &eqfn,  &positivity};
  std::size_t failures = 0;
  for (const Sweep* s : all) failures += s->failures;
  res.pass = failures == 0;
  res.detail = join({assoc.summary("associativity"), bar_anti.summary("bar anti-automorphism"),
                     t1_hom.summary("t=1 morphism"), weight_hom.summary("weight morphism"),
                     division.summary("division round-trip"),
                     involution.summary("matrix involution"),
                     factorisation.summary("E_k B F_k"),
                     quantum_involution.summary("seed involution"), eqfn.summary("eqFN"),
                     positivity.summary("positivity+parity")},
                    ", ");
  return res;
}

}  // namespace

CriterionResult run_criterion(int id, const AcceptanceOptions& options) {
  if (id < 1 || id > kCriterionCount) {
    throw DomainError("no acceptance criterion " + std::to_string(id));
  }
  try {
    switch (id) {
      case 1: return criterion_cartan_series();
      case 2: return criterion_d4_golden(options);
      case 3: return criterion_compat_sweep(options);
      case 4: return criterion_sl3_classical();
      case 5: return criterion_sl2_quantum();
      case 6: return criterion_sequences();
      case 7: return criterion_type_a(options);
      case 8: return criterion_baxter();
      case 9: return criterion_drinfeld();
      default: return criterion_properties(options);
    }
  } catch (const Error& e) {
    return {id, "criterion " + std::to_string(id), false, 0, 0, e.what()};
  }
}

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kCriterionCount; ++id) out.push_back(run_criterion(id, options));
  return out;
}

}  // namespace qtcluster
