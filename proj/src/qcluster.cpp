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

#include "qtcluster/qcluster.hpp"

#include <algorithm>
#include <regex>

#include "qtcluster/errors.hpp"

namespace qtcluster {

namespace {

constexpr std::size_t kClassicalBudget = 1'000'000;

// Ordered product of current variables with exponents d >= 0, normalised
// to the commutative monomial X^d.
TorusElement commutative_product(const QuantumSeed& seed,
                                 const std::vector<std::pair<std::size_t, std::int64_t>>& d) {
  const QuantumTorus& torus = seed.torus();
  const IntMatrix& lambda = seed.lambda();
  TorusElement out = TorusElement::unit();
  std::int64_t correction = 0;
  for (std::size_t a = 0; a < d.size(); ++a) {
    for (std::size_t b = a + 1; b < d.size(); ++b) {
      correction = checked_add(
          correction, checked_mul(checked_mul(d[a].second, d[b].second),
                                  lambda(d[a].first, d[b].first)));
    }
    for (std::int64_t p = 0; p < d[a].second; ++p) {
      out = torus.multiply(out, seed.var_at(d[a].first));
    }
  }
  return out.scaled(TCoeff::monomial(1, static_cast<int>(-correction)));
}

}  // namespace

const TorusElement& QuantumSeed::var(const Vertex& v) const {
  return *vars_[slice_->row_of(v)];
}

QuantumSeed initial_seed(const QuiverSlice& slice) {
  QuantumSeed seed;
  seed.slice_ = std::make_shared<const QuiverSlice>(slice);
  seed.torus_ = std::make_shared<const QuantumTorus>(slice.cartan());
  for (const Vertex& v : slice.vertices()) {
    seed.vars_.push_back(
        std::make_shared<const TorusElement>(TorusElement::monomial(ExpVector::unit(v))));
  }
  seed.b_ = slice.exchange();
  seed.lambda_ = build_lambda(slice);
  CompatReport report = check_compatible(seed.b_, seed.lambda_);
  if (!report.compatible()) {
    throw InvariantError("initial pair (Lambda, B) of slice " +
                         to_string(slice.window()) + " is not compatible");
  }
  return seed;
}

QuantumSeed mutate(const QuantumSeed& seed, const Vertex& k) {
  const QuiverSlice& slice = seed.slice();
  const std::size_t col = slice.column_of(k);
  const std::size_t kr = slice.row_of(k);
  const ExchangeMatrix& b = seed.b();
  const IntMatrix& lambda = seed.lambda();

  std::vector<std::pair<std::size_t, std::int64_t>> plus, minus;
  std::int64_t gamma_plus = 0, gamma_minus = 0;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    std::int64_t bik = b.b(i, col);
    if (bik > 0) {
      plus.emplace_back(i, bik);
      gamma_plus = checked_add(gamma_plus, checked_mul(bik, lambda(kr, i)));
    } else if (bik < 0) {
      minus.emplace_back(i, -bik);
      gamma_minus = checked_add(gamma_minus, checked_mul(-bik, lambda(kr, i)));
    }
  }

  TorusElement numerator =
      commutative_product(seed, plus).scaled(
          TCoeff::monomial(1, static_cast<int>(gamma_plus))) +
      commutative_product(seed, minus).scaled(
          TCoeff::monomial(1, static_cast<int>(gamma_minus)));

  TorusElement fresh;
  try {
    fresh = seed.torus().exact_left_divide(numerator, seed.var_at(kr));
  } catch (const NonExactDivision& e) {
    throw InvariantError("exchange numerator at " + to_string(k) +
                         " is not divisible: " + e.what());
  }

  VariableCheck check = check_variable(fresh);
  if (!check.ok()) {
    throw InvariantError(
        "mutated variable at " + to_string(k) + " fails" +
        (check.bar_invariant ? "" : " bar-invariance") +
        (check.positive ? "" : " positivity") +
        (check.single_parity ? "" : " t-parity"));
  }

  QuantumSeed out = seed;
  out.vars_[kr] = std::make_shared<const TorusElement>(std::move(fresh));
  out.lambda_ = mutate_lambda(lambda, b, col);
  out.b_ = mutate_matrix(b, col);
  out.history_.push_back(k);
  return out;
}

std::shared_ptr<const QuantumSeed> SeedCache::find(const std::string& key) const {
  std::lock_guard lock(mutex_);
  auto it = seeds_.find(key);
  return it == seeds_.end() ? nullptr : it->second;
}

void SeedCache::insert(const std::string& key, const QuantumSeed& seed) {
  std::lock_guard lock(mutex_);
  seeds_.try_emplace(key, std::make_shared<const QuantumSeed>(seed));
}

std::size_t SeedCache::size() const {
  std::lock_guard lock(mutex_);
  return seeds_.size();
}

std::string cache_key(const QuiverSlice& slice, const std::vector<Vertex>& path) {
  return slice.cartan().label() + "|" + to_string(slice.window()) + "|" +
         to_string(path);
}

QuantumSeed mutate_along(const QuantumSeed& seed, const std::vector<Vertex>& path,
                         SeedCache* cache) {
  if (cache == nullptr) {
    QuantumSeed cur = seed;
    for (const Vertex& k : path) cur = mutate(cur, k);
    return cur;
  }

  // Cached seeds are keyed by the full history from the initial seed.
  std::vector<Vertex> full = seed.history();
  std::size_t start = 0;
  std::shared_ptr<const QuantumSeed> best;
  for (std::size_t len = path.size(); len > 0; --len) {
    std::vector<Vertex> prefix = full;
    prefix.insert(prefix.end(), path.begin(), path.begin() + static_cast<std::ptrdiff_t>(len));
    if (auto hit = cache->find(cache_key(seed.slice(), prefix))) {
      best = hit;
      start = len;
      break;
    }
  }
  QuantumSeed cur = best ? *best : seed;
  for (std::size_t s = start; s < path.size(); ++s) {
    cur = mutate(cur, path[s]);
    cache->insert(cache_key(seed.slice(), cur.history()), cur);
  }
  return cur;
}

VariableCheck check_variable(const TorusElement& x) {
  VariableCheck check;
  check.bar_invariant = x.bar() == x;
  check.positive = true;
  check.single_parity = true;
  for (const auto& [e, c] : x.terms()) {
    check.positive = check.positive && c.non_negative();
    check.single_parity = check.single_parity && c.single_parity();
  }
  return check;
}

std::vector<CommutationFailure> check_commutation(const QuantumSeed& seed) {
  std::vector<CommutationFailure> failures;
  const auto& vs = seed.slice().vertices();
  for (std::size_t u = 0; u < seed.size(); ++u) {
    for (std::size_t w = u + 1; w < seed.size(); ++w) {
      std::int64_t l = seed.lambda()(u, w);
      if (!seed.torus().t_commute(seed.var_at(u), seed.var_at(w), l)) {
        failures.push_back({vs[u], vs[w], l});
      }
    }
  }
  return failures;
}

namespace {

// Lexicographic group order on Laurent monomials with variables ranked by
// (node, level) ascending.
std::vector<std::pair<std::pair<int, int>, std::int64_t>> classical_key(
    const ExpVector& e) {
  std::vector<std::pair<std::pair<int, int>, std::int64_t>> key;
  for (const auto& [v, x] : e) key.push_back({{v.node, v.level}, x});
  std::sort(key.begin(), key.end());
  return key;
}

int classical_compare(const ExpVector& a, const ExpVector& b) {
  auto ka = classical_key(a), kb = classical_key(b);
  std::size_t i = 0, j = 0;
  while (i < ka.size() || j < kb.size()) {
    std::int64_t xa = 0, xb = 0;
    if (j == kb.size() || (i < ka.size() && ka[i].first < kb[j].first)) {
      xa = ka[i++].second;
    } else if (i == ka.size() || kb[j].first < ka[i].first) {
      xb = kb[j++].second;
    } else {
      xa = ka[i++].second;
      xb = kb[j++].second;
    }
    if (xa != xb) return xa < xb ? -1 : 1;
  }
  return 0;
}

std::pair<ExpVector, std::int64_t> classical_extreme(const LaurentPolynomial& p,
                                                     bool largest) {
  auto it = p.terms().begin();
  auto best = it;
  for (++it; it != p.terms().end(); ++it) {
    int c = classical_compare(it->first, best->first);
    if (largest ? c > 0 : c < 0) best = it;
  }
  return {best->first, best->second};
}

}  // namespace

LaurentPolynomial classical_divide(const LaurentPolynomial& a,
                                   const LaurentPolynomial& d) {
  if (d.is_zero()) throw DomainError("division by zero polynomial");
  LaurentPolynomial quotient;
  if (a.is_zero()) return quotient;
  auto [lead_d, lead_c] = classical_extreme(d, true);
  ExpVector floor = classical_extreme(a, false).first - classical_extreme(d, false).first;
  LaurentPolynomial rem = a;
  for (std::size_t step = 0; !rem.is_zero(); ++step) {
    if (step >= kClassicalBudget) throw InvariantError("classical division budget exhausted");
    auto [lead_r, rc] = classical_extreme(rem, true);
    ExpVector x = lead_r - lead_d;
    if (classical_compare(x, floor) < 0 || rc % lead_c != 0) {
      throw InvariantError("classical division leaves remainder " + to_string(rem));
    }
    LaurentPolynomial piece = LaurentPolynomial::monomial(x, rc / lead_c);
    quotient += piece;
    rem = rem - d * piece;
  }
  return quotient;
}

ClassicalCluster classical_mutate_along(const QuiverSlice& slice,
                                        const std::vector<Vertex>& path) {
  ClassicalCluster cluster;
  for (const Vertex& v : slice.vertices()) {
    cluster[v] = LaurentPolynomial::monomial(ExpVector::unit(v));
  }
  ExchangeMatrix b = slice.exchange();
  const auto& vs = slice.vertices();
  for (const Vertex& k : path) {
    const std::size_t col = slice.column_of(k);
    LaurentPolynomial up = LaurentPolynomial::constant(1);
    LaurentPolynomial down = LaurentPolynomial::constant(1);
    for (std::size_t i = 0; i < b.rows(); ++i) {
      std::int64_t bik = b.b(i, col);
      for (std::int64_t p = 0; p < std::llabs(bik); ++p) {
        if (bik > 0) up = up * cluster.at(vs[i]);
        else down = down * cluster.at(vs[i]);
      }
    }
    cluster[k] = classical_divide(up + down, cluster.at(k));
    b = mutate_matrix(b, col);
  }
  return cluster;
}

std::vector<Vertex> parse_path(const std::string& text) {
  static const std::regex vertex_re(R"(\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\))");
  std::vector<Vertex> path;
  std::size_t consumed = 0;
  auto check_gap = [&](std::size_t from, std::size_t to) {
    for (std::size_t p = from; p < to; ++p) {
      char ch = text[p];
      if (ch != ';' && ch != ',' && !std::isspace(static_cast<unsigned char>(ch))) {
        throw DomainError("unexpected '" + std::string(1, ch) + "' in path '" + text + "'");
      }
    }
  };
  for (auto it = std::sregex_iterator(text.begin(), text.end(), vertex_re);
       it != std::sregex_iterator(); ++it) {
    auto pos = static_cast<std::size_t>(it->position());
    check_gap(consumed, pos);
    path.push_back({std::stoi((*it)[1]), std::stoi((*it)[2])});
    consumed = pos + static_cast<std::size_t>(it->length());
  }
  check_gap(consumed, text.size());
  return path;
}

std::string to_string(const std::vector<Vertex>& path) {
  std::string out;
  for (const Vertex& v : path) {
    if (!out.empty()) out += ' ';
    out += to_string(v);
  }
  return out;
}

}  // namespace qtcluster
