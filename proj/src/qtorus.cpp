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

#include "qtcluster/qtorus.hpp"

#include <algorithm>
#include <sstream>

#include "qtcluster/int_matrix.hpp"

namespace qtcluster {

namespace {

constexpr int kTableGap = 96;
constexpr std::size_t kDivisionBudget = 2'000'000;

}  // namespace

TorusElement TorusElement::monomial(const ExpVector& e, TCoeff c) {
  TorusElement out;
  out.add_term(e, c);
  return out;
}

TCoeff TorusElement::coeff(const ExpVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? TCoeff{} : it->second;
}

void TorusElement::add_term(const ExpVector& e, const TCoeff& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
  TorusElement out = *this;
  out += o;
  return out;
}

TorusElement TorusElement::operator-(const TorusElement& o) const {
  TorusElement out = *this;
  out -= o;
  return out;
}

TorusElement TorusElement::operator-() const {
  TorusElement out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

TorusElement& TorusElement::operator+=(const TorusElement& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

TorusElement& TorusElement::operator-=(const TorusElement& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

TorusElement TorusElement::scaled(const TCoeff& c) const {
  TorusElement out;
  for (const auto& [e, x] : terms_) out.add_term(e, x * c);
  return out;
}

TorusElement TorusElement::bar() const {
  TorusElement out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.bar());
  return out;
}

QuantumTorus::QuantumTorus(CartanData cartan)
    : cartan_(std::move(cartan)), table_gap_(kTableGap) {
  const int n = cartan_.rank();
  const int width = 2 * table_gap_ + 1;
  f_table_.assign(static_cast<std::size_t>(n) * n * width, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      auto base = static_cast<std::size_t>(((i - 1) * n + (j - 1)) * width);
      for (int m = -table_gap_; m <= table_gap_; ++m) {
        f_table_[base + table_gap_ + m] = cartan_.f_form(i, j, m);
      }
    }
  }
}

std::int64_t QuantumTorus::f_lookup(int i, int j, int gap) const {
  if (gap < -table_gap_ || gap > table_gap_) return cartan_.f_form(i, j, gap);
  const int n = cartan_.rank();
  auto base =
      static_cast<std::size_t>(((i - 1) * n + (j - 1)) * (2 * table_gap_ + 1));
  return f_table_[base + table_gap_ + gap];
}

std::int64_t QuantumTorus::lambda(const Vertex& a, const Vertex& b) const {
  cartan_.check_node(a.node);
  cartan_.check_node(b.node);
  return f_lookup(a.node, b.node, b.level - a.level);
}

std::int64_t QuantumTorus::lambda(const ExpVector& e,
                                  const ExpVector& f) const {
  for (const auto& [a, x] : e) cartan_.check_node(a.node);
  for (const auto& [b, y] : f) cartan_.check_node(b.node);
  std::int64_t total = 0;
  for (const auto& [a, x] : e) {
    for (const auto& [b, y] : f) {
      std::int64_t l = f_lookup(a.node, b.node, b.level - a.level);
      if (l == 0) continue;
      total = checked_add(total, checked_mul(checked_mul(x, y), l));
    }
  }
  return total;
}

TorusElement QuantumTorus::multiply(const TorusElement& a,
                                    const TorusElement& b) const {
  TorusElement out;
  if (a.is_zero() || b.is_zero()) return out;

  // Index the vertices occurring in b so the pairing with each term of a is
  // a dot product against one precomputed row.
  std::vector<Vertex> universe;
  for (const auto& [w, c] : b.terms()) {
    for (const auto& [v, x] : w) universe.push_back(v);
  }
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()),
                 universe.end());
  for (const Vertex& v : universe) cartan_.check_node(v.node);

  struct Indexed {
    const ExpVector* exp;
    const TCoeff* coeff;
    std::vector<std::pair<std::size_t, std::int64_t>> slots;
  };
  std::vector<Indexed> right;
  right.reserve(b.size());
  for (const auto& [w, c] : b.terms()) {
    Indexed ix{&w, &c, {}};
    for (const auto& [v, x] : w) {
      auto pos = std::lower_bound(universe.begin(), universe.end(), v);
      ix.slots.emplace_back(static_cast<std::size_t>(pos - universe.begin()), x);
    }
    right.push_back(std::move(ix));
  }

  std::vector<std::int64_t> row(universe.size());
  for (const auto& [u, cu] : a.terms()) {
    std::fill(row.begin(), row.end(), 0);
    for (const auto& [va, xa] : u) {
      cartan_.check_node(va.node);
      for (std::size_t k = 0; k < universe.size(); ++k) {
        std::int64_t f =
            f_lookup(va.node, universe[k].node, universe[k].level - va.level);
        if (f != 0) row[k] = checked_add(row[k], checked_mul(xa, f));
      }
    }
    for (const Indexed& ix : right) {
      std::int64_t l = 0;
      for (const auto& [k, x] : ix.slots) {
        if (row[k] != 0) l = checked_add(l, checked_mul(row[k], x));
      }
      out.add_term(u + *ix.exp, (cu * *ix.coeff).shifted(static_cast<int>(l)));
    }
  }
  return out;
}

TorusElement QuantumTorus::power(const TorusElement& a,
                                 unsigned exponent) const {
  TorusElement out = TorusElement::unit();
  for (unsigned k = 0; k < exponent; ++k) out = multiply(out, a);
  return out;
}

TorusElement QuantumTorus::exact_left_divide(const TorusElement& a,
                                             const TorusElement& d) const {
  if (d.is_zero()) throw DomainError("division by zero torus element");
  TorusElement quotient;
  if (a.is_zero()) return quotient;

  const auto& [lead_d, lead_c] = *d.terms().rbegin();
  const ExpVector floor = a.terms().begin()->first - d.terms().begin()->first;

  TorusElement rem = a;
  for (std::size_t step = 0; !rem.is_zero(); ++step) {
    if (step >= kDivisionBudget) {
      throw NonExactDivision("division step budget exhausted", rem);
    }
    const auto& [lead_r, rem_c] = *rem.terms().rbegin();
    ExpVector x = lead_r - lead_d;
    if (monomial_compare(x, floor) < 0) {
      throw NonExactDivision("divisor does not divide dividend", rem);
    }
    auto q = rem_c.divide_exact(lead_c);
    if (!q) {
      throw NonExactDivision("leading coefficient is not divisible", rem);
    }
    TCoeff cx = q->shifted(static_cast<int>(-lambda(lead_d, x)));
    for (const auto& [w, cw] : d.terms()) {
      rem.add_term(w + x, -(cw * cx).shifted(static_cast<int>(lambda(w, x))));
    }
    quotient.add_term(x, cx);
  }
  return quotient;
}

bool QuantumTorus::t_commute(const TorusElement& a, const TorusElement& b,
                             std::int64_t t_exponent) const {
  TorusElement lhs = multiply(a, b);
  TorusElement rhs = multiply(b, a).scaled(
      TCoeff::monomial(1, static_cast<int>(checked_mul(2, t_exponent))));
  return lhs == rhs;
}

std::int64_t lambda_of(const CartanData& cartan, const ExpVector& e,
                       const ExpVector& f) {
  for (const auto& [v, x] : e) {
    if (!cartan.contains(v.node, v.level)) {
      throw DomainError("vertex " + to_string(v) + " is not in the quiver");
    }
  }
  for (const auto& [v, x] : f) {
    if (!cartan.contains(v.node, v.level)) {
      throw DomainError("vertex " + to_string(v) + " is not in the quiver");
    }
  }
  std::int64_t total = 0;
  for (const auto& [a, x] : e) {
    for (const auto& [b, y] : f) {
      std::int64_t l = cartan.f_form(a.node, b.node, b.level - a.level);
      total = checked_add(total, checked_mul(checked_mul(x, y), l));
    }
  }
  return total;
}

ExpVector a_monomial(const CartanData& cartan, int i, int r) {
  cartan.check_node(i);
  if (!cartan.contains(i, r - 1)) {
    throw DomainError("A-monomial centre " + to_string(Vertex{i, r - 1}) +
                      " is not in the quiver");
  }
  ExpVector out;
  out.add({i, r - 1}, 1);
  out.add({i, r - 3}, 1);
  for (int j : cartan.neighbours(i)) out.add({j, r - 2}, -1);
  return out;
}

ExpVector embed_Y_exponent(const CartanData& cartan, const ExpVector& y) {
  ExpVector out;
  for (const auto& [v, x] : y) {
    cartan.check_node(v.node);
    if (!cartan.contains(v.node, v.level)) {
      throw DomainError("Y-variable " + to_string(v) +
                        " has no image in this quiver component");
    }
    out.add(v, x);
    out.add({v.node, v.level + 2}, -x);
  }
  return out;
}

TorusElement embed_Y(const CartanData& cartan, const ExpVector& y) {
  return TorusElement::monomial(embed_Y_exponent(cartan, y));
}

LaurentPolynomial embed_Y(const CartanData& cartan,
                          const LaurentPolynomial& y) {
  LaurentPolynomial out;
  for (const auto& [e, c] : y.terms()) {
    out.add_term(embed_Y_exponent(cartan, e), c);
  }
  return out;
}

LaurentPolynomial evaluate_t1(const TorusElement& a) {
  LaurentPolynomial out;
  for (const auto& [e, c] : a.terms()) out.add_term(e, c.at_one());
  return out;
}

Weight Weight::operator+(const Weight& o) const {
  if (twice.size() != o.twice.size()) {
    throw DomainError("weights of different rank");
  }
  Weight out{twice};
  for (std::size_t k = 0; k < twice.size(); ++k) {
    out.twice[k] = checked_add(out.twice[k], o.twice[k]);
  }
  return out;
}

WeightExpr WeightExpr::single(const Weight& w, std::int64_t c) {
  WeightExpr out(static_cast<int>(w.twice.size()));
  out.add_term(w, c);
  return out;
}

Weight WeightExpr::fundamental(int rank, int i, std::int64_t half_units) {
  if (i < 1 || i > rank) throw DomainError("node out of range");
  Weight w{std::vector<std::int64_t>(static_cast<std::size_t>(rank), 0)};
  w.twice[static_cast<std::size_t>(i - 1)] = half_units;
  return w;
}

void WeightExpr::add_term(const Weight& w, std::int64_t c) {
  if (static_cast<int>(w.twice.size()) != rank_) {
    throw DomainError("weight rank mismatch");
  }
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second = checked_add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

WeightExpr WeightExpr::operator+(const WeightExpr& o) const {
  WeightExpr out = *this;
  for (const auto& [w, c] : o.terms_) out.add_term(w, c);
  return out;
}

WeightExpr WeightExpr::operator*(const WeightExpr& o) const {
  WeightExpr out(rank_);
  for (const auto& [w1, c1] : terms_) {
    for (const auto& [w2, c2] : o.terms_) {
      out.add_term(w1 + w2, checked_mul(c1, c2));
    }
  }
  return out;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < w.twice.size(); ++k) {
    std::int64_t t = w.twice[k];
    if (t == 0) continue;
    bool neg = t < 0;
    std::int64_t a = neg ? -t : t;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    if (a % 2 == 0) {
      if (a != 2) os << a / 2 << ' ';
    } else {
      os << a << "/2 ";
    }
    os << 'w' << k + 1;
    first = false;
  }
  if (first) os << '0';
  return "[" + os.str() + "]";
}

std::string to_string(const WeightExpr& w) {
  if (w.terms().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [weight, c] : w.terms()) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << '-';
    std::int64_t a = c < 0 ? -c : c;
    if (a != 1) os << a;
    os << to_string(weight);
    first = false;
  }
  return os.str();
}

WeightExpr weight_character(const CartanData& cartan, const TorusElement& a) {
  const int n = cartan.rank();
  WeightExpr out(n);
  for (const auto& [e, c] : a.terms()) {
    Weight w{std::vector<std::int64_t>(static_cast<std::size_t>(n), 0)};
    for (const auto& [v, x] : e) {
      cartan.check_node(v.node);
      auto& slot = w.twice[static_cast<std::size_t>(v.node - 1)];
      slot = checked_add(slot, checked_mul(-x, v.level));
    }
    out.add_term(w, c.at_one());
  }
  return out;
}

}  // namespace qtcluster
