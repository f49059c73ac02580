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
#include <vector>

#include "qtcluster/cartan.hpp"
#include "qtcluster/errors.hpp"
#include "qtcluster/laurent.hpp"
#include "qtcluster/tcoeff.hpp"
#include "qtcluster/vertex.hpp"

namespace qtcluster {

/// Element of the quantum torus, written in the basis of commutative
/// monomials z^u with coefficients in Z[t^{1/2}, t^{-1/2}].
///
/// Commutative monomials are bar-invariant, so the bar involution acts on
/// coefficients only. The ordered product of two basis elements is
///   z^u * z^w = t^{L(u,w)/2} z^{u+w}
/// where L is the skew form supplied by QuantumTorus.
class TorusElement {
 public:
  using Terms = std::map<ExpVector, TCoeff, MonomialLess>;

  TorusElement() = default;
  static TorusElement monomial(const ExpVector& e, TCoeff c = TCoeff::one());
  static TorusElement unit() { return monomial({}); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  TCoeff coeff(const ExpVector& e) const;

  void add_term(const ExpVector& e, const TCoeff& c);

  TorusElement operator+(const TorusElement& o) const;
  TorusElement operator-(const TorusElement& o) const;
  TorusElement operator-() const;
  TorusElement& operator+=(const TorusElement& o);
  TorusElement& operator-=(const TorusElement& o);
  /// Multiplication by a central scalar.
  TorusElement scaled(const TCoeff& c) const;

  TorusElement bar() const;

  friend bool operator==(const TorusElement& a, const TorusElement& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
};

/// Raised by exact_left_divide when the divisor does not divide the dividend.
class NonExactDivision : public InvariantError {
 public:
  NonExactDivision(const std::string& what, TorusElement remainder)
      : InvariantError(what), remainder_(std::move(remainder)) {}
  const TorusElement& remainder() const { return remainder_; }

 private:
  TorusElement remainder_;
};

/// The based quantum torus generated by z_{i,r}^{+-1}, (i, r) in the chosen
/// component, with z_{i,r} * z_{j,s} = t^{F_ij(s-r)} z_{j,s} * z_{i,r}.
class QuantumTorus {
 public:
  explicit QuantumTorus(CartanData cartan);

  const CartanData& cartan() const { return cartan_; }

  /// L(e_a, e_b) = F_{i,j}(s - r) for a = (i, r), b = (j, s).
  std::int64_t lambda(const Vertex& a, const Vertex& b) const;
  /// Bilinear extension.
  std::int64_t lambda(const ExpVector& e, const ExpVector& f) const;

  TorusElement multiply(const TorusElement& a, const TorusElement& b) const;
  TorusElement power(const TorusElement& a, unsigned exponent) const;

  /// x with d * x = a. Long division that repeatedly cancels the leading
  /// term (monomial_compare order) of the remainder against the leading
  /// term of d. Throws NonExactDivision, carrying the remainder, when no
  /// Laurent quotient exists.
  TorusElement exact_left_divide(const TorusElement& a,
                                 const TorusElement& d) const;

  /// True iff a * b == t^{exponent} b * a.
  bool t_commute(const TorusElement& a, const TorusElement& b,
                 std::int64_t t_exponent) const;

 private:
  std::int64_t f_lookup(int i, int j, int gap) const;

  CartanData cartan_;
  int table_gap_ = 0;
  // f_table_[((i-1)*rank + (j-1)) * (2*gap+1) + gap + m]
  std::vector<std::int64_t> f_table_;
};

/// Skew form of the torus on exponent vectors.
std::int64_t lambda_of(const CartanData& cartan, const ExpVector& e,
                       const ExpVector& f);

/// Exponent map of A_{i,r}: Y[i,r-1] Y[i,r-3] prod_{j~i} Y[j,r-2]^{-1},
/// where Y[j,s] stands for Y_{j,q^{s+1}}. In spectral notation this is
/// Y_{i,q^r} Y_{i,q^{r-2}} prod_{j~i} Y_{j,q^{r-1}}^{-1}, centred at q^{r-1};
/// a_monomial(A1, 1, 1) = Y_{1,q^{-1}} Y_{1,q}. Requires (i, r-1) in the
/// quiver component.
ExpVector a_monomial(const CartanData& cartan, int i, int r);

/// z-exponent of the image of the commutative Y-monomial y, where the key
/// (i, r) denotes Y_{i,q^{r+1}} and maps to z_{i,r} z_{i,r+2}^{-1}.
ExpVector embed_Y_exponent(const CartanData& cartan, const ExpVector& y);
/// Image of a commutative Y-monomial in the quantum torus.
TorusElement embed_Y(const CartanData& cartan, const ExpVector& y);
/// Image of a commutative Y-polynomial under the t = 1 embedding.
LaurentPolynomial embed_Y(const CartanData& cartan, const LaurentPolynomial& y);

/// Specialisation t^{1/2} -> 1.
LaurentPolynomial evaluate_t1(const TorusElement& a);

/// Weight in the fundamental-weight basis with half-integer coordinates,
/// stored doubled: twice[i-1] = 2 * (coefficient of omega_i).
struct Weight {
  std::vector<std::int64_t> twice;

  Weight operator+(const Weight& o) const;
  friend auto operator<=>(const Weight&, const Weight&) = default;
};

/// Finite element of the weight group ring: sum of c_w [w].
class WeightExpr {
 public:
  explicit WeightExpr(int rank = 0) : rank_(rank) {}
  static WeightExpr single(const Weight& w, std::int64_t c = 1);
  /// [(half_units / 2) omega_i]
  static Weight fundamental(int rank, int i, std::int64_t half_units);

  int rank() const { return rank_; }
  const std::map<Weight, std::int64_t>& terms() const { return terms_; }
  void add_term(const Weight& w, std::int64_t c);

  WeightExpr operator+(const WeightExpr& o) const;
  WeightExpr operator*(const WeightExpr& o) const;

  friend bool operator==(const WeightExpr& a, const WeightExpr& b) {
    return a.terms_ == b.terms_;
  }

 private:
  int rank_;
  std::map<Weight, std::int64_t> terms_;
};

std::string to_string(const Weight& w);
std::string to_string(const WeightExpr& w);

/// chi(z_{i,r}^{+-1}) = [(-+ r/2) omega_i], chi(t^{1/2}) = 1.
WeightExpr weight_character(const CartanData& cartan, const TorusElement& a);

}  // namespace qtcluster
