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

#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "qtcluster/vertex.hpp"

namespace qtcluster {

/// Commutative Laurent polynomial with integer coefficients. The variables
/// are indexed by vertices; whether they stand for z_{i,r} or Y_{i,q^{r+1}}
/// is up to the caller.
class LaurentPolynomial {
 public:
  using Terms = std::map<ExpVector, std::int64_t, MonomialLess>;

  LaurentPolynomial() = default;
  static LaurentPolynomial monomial(const ExpVector& e, std::int64_t c = 1);
  static LaurentPolynomial constant(std::int64_t c) { return monomial({}, c); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  std::int64_t coeff(const ExpVector& e) const;

  void add_term(const ExpVector& e, std::int64_t c);

  LaurentPolynomial operator+(const LaurentPolynomial& o) const;
  LaurentPolynomial operator-(const LaurentPolynomial& o) const;
  LaurentPolynomial operator*(const LaurentPolynomial& o) const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& o);

  friend bool operator==(const LaurentPolynomial& a,
                         const LaurentPolynomial& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

/// Monomial factors "z[i,r]^e" sorted in vertex order, joined by spaces;
/// "1" for the empty monomial. `symbol` replaces "z".
std::string monomial_string(const ExpVector& e, const std::string& symbol = "z");
std::string to_string(const LaurentPolynomial& p, const std::string& symbol = "z");

}  // namespace qtcluster
