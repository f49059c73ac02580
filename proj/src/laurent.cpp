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

#include "qtcluster/laurent.hpp"

#include <cstdlib>

#include "qtcluster/int_matrix.hpp"

namespace qtcluster {

LaurentPolynomial LaurentPolynomial::monomial(const ExpVector& e,
                                              std::int64_t c) {
  LaurentPolynomial p;
  p.add_term(e, c);
  return p;
}

std::int64_t LaurentPolynomial::coeff(const ExpVector& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPolynomial::add_term(const ExpVector& e, std::int64_t c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& o) const {
  LaurentPolynomial out = *this;
  out += o;
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& o) const {
  LaurentPolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, checked_mul(c, -1));
  return out;
}

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& o) const {
  LaurentPolynomial out;
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) out.add_term(ea + eb, checked_mul(ca, cb));
  return out;
}

std::string monomial_string(const ExpVector& e, const std::string& symbol) {
  if (e.empty()) return "1";
  std::string out;
  for (const auto& [v, k] : e) {
    if (!out.empty()) out += ' ';
    out += symbol + "[" + std::to_string(v.node) + "," + std::to_string(v.level) + "]";
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::string to_string(const LaurentPolynomial& p, const std::string& symbol) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) out += " + ";
    first = false;
    if (c == 1) {
      out += monomial_string(e, symbol);
    } else if (e.empty()) {
      out += std::to_string(c);
    } else {
      out += std::to_string(c) + " " + monomial_string(e, symbol);
    }
  }
  return out;
}

}  // namespace qtcluster
