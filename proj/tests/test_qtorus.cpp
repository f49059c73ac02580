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


#include <doctest.h>

#include <random>

#include "qtcluster/errors.hpp"
#include "qtcluster/qtorus.hpp"

using namespace qtcluster;

namespace {

// Pairing straight from the skew form, bypassing the torus tables.
std::int64_t pairing(const CartanData& c, const ExpVector& u, const ExpVector& w) {
  std::int64_t total = 0;
  for (const auto& [a, x] : u)
    for (const auto& [b, y] : w) total += x * y * c.f_form(a.node, b.node, b.level - a.level);
  return total;
}

struct Gen {
  const CartanData& c;
  std::mt19937_64 rng;
  std::vector<Vertex> verts;

  Gen(const CartanData& cartan, int lo, int hi, std::uint64_t seed) : c(cartan), rng(seed) {
    for (int r = hi; r >= lo; --r)
      for (int i = 1; i <= c.rank(); ++i)
        if (c.contains(i, r)) verts.push_back({i, r});
  }
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  ExpVector exponent() {
    ExpVector e;
    for (int k = pick(0, 3); k > 0; --k)
      e.add(verts[static_cast<std::size_t>(pick(0, static_cast<int>(verts.size()) - 1))], pick(-2, 2));
    return e;
  }
  TCoeff coeff() {
    return TCoeff::from_coeffs(pick(-3, 3), {pick(-2, 2), pick(1, 3)});
  }
  TorusElement element(int max_terms = 5) {
    TorusElement a;
    for (int k = pick(1, max_terms); k > 0; --k) a.add_term(exponent(), coeff());
    return a;
  }
};

TorusElement z(int i, int r, std::int64_t e = 1) {
  return TorusElement::monomial(ExpVector::unit({i, r}, e));
}

}  // namespace

TEST_CASE("t-coefficients") {
  TCoeff a = TCoeff::from_coeffs(-1, {1, 0, 2});  // v^-1 + 2v
  CHECK(a.low() == -1);
  CHECK(a.high() == 1);
  CHECK(a.term_count() == 2);
  CHECK(a.bar() == TCoeff::from_coeffs(-1, {2, 0, 1}));
  CHECK(a.shifted(3) == TCoeff::from_coeffs(2, {1, 0, 2}));
  CHECK(a.at_one() == 3);
  CHECK(a.single_parity());
  CHECK_FALSE(TCoeff::from_coeffs(0, {1, 1}).single_parity());
  CHECK_FALSE((-a).non_negative());
  TCoeff b = TCoeff::from_coeffs(0, {1, 1});
  CHECK((a * b).divide_exact(b) == a);
  CHECK_FALSE(a.divide_exact(b).has_value());
  CHECK((a - a).is_zero());
  CHECK(TCoeff::from_coeffs(5, {0, 0}).is_zero());
  CHECK(TCoeff::one().is_one());
}

TEST_CASE("monomial products follow the skew form") {
  auto c = build_cartan(DynkinType::D, 4);
  QuantumTorus t(c);
  Gen g(c, -8, 8, 11);
  for (int k = 0; k < 200; ++k) {
    ExpVector u = g.exponent(), w = g.exponent();
    CHECK(t.lambda(u, w) == pairing(c, u, w));
    CHECK(t.lambda(u, w) == -t.lambda(w, u));
    auto p = t.multiply(TorusElement::monomial(u), TorusElement::monomial(w));
    CHECK(p == TorusElement::monomial(u + w, TCoeff::monomial(1, static_cast<int>(pairing(c, u, w)))));
  }
  auto a1 = build_cartan(DynkinType::A, 1);
  QuantumTorus t1(a1);
  CHECK(t1.lambda(Vertex{1, 0}, Vertex{1, 2}) == -1);
  CHECK(t1.t_commute(z(1, 0), z(1, 2), -1));
  CHECK_FALSE(t1.t_commute(z(1, 0), z(1, 2), 1));
  CHECK(t1.t_commute(z(1, 0), z(1, 4), 0));
}

TEST_CASE("ring axioms on random elements") {
  auto c = build_cartan(DynkinType::A, 3);
  QuantumTorus t(c);
  Gen g(c, -6, 6, 3);
  for (int k = 0; k < 200; ++k) {
    auto a = g.element(), b = g.element(), d = g.element();
    CHECK(t.multiply(t.multiply(a, b), d) == t.multiply(a, t.multiply(b, d)));
    CHECK(t.multiply(a, b + d) == t.multiply(a, b) + t.multiply(a, d));
    CHECK(t.multiply(a, TorusElement::unit()) == a);
    CHECK(t.multiply(a, b).bar() == t.multiply(b.bar(), a.bar()));
    CHECK(evaluate_t1(t.multiply(a, b)) == evaluate_t1(a) * evaluate_t1(b));
  }
  auto a = g.element(3);
  CHECK(t.power(a, 3) == t.multiply(a, t.multiply(a, a)));
  CHECK(t.power(a, 0) == TorusElement::unit());
}

TEST_CASE("exact division") {
  auto c = build_cartan(DynkinType::A, 2);
  QuantumTorus t(c);
  Gen g(c, -5, 5, 5);
  for (int k = 0; k < 200; ++k) {
    auto q = g.element(), d = g.element();
    CHECK(t.exact_left_divide(t.multiply(d, q), d) == q);
  }
  auto d = z(1, 0) + z(1, 2);
  CHECK_THROWS_AS(t.exact_left_divide(z(1, 0), d), NonExactDivision);
  try {
    t.exact_left_divide(t.multiply(d, z(2, 1)) + z(1, 4), d);
    FAIL("division should not be exact");
  } catch (const NonExactDivision& e) {
    CHECK_FALSE(e.remainder().is_zero());
  }
  CHECK_THROWS_AS(t.exact_left_divide(d, TorusElement{}), DomainError);
  CHECK(t.exact_left_divide(TorusElement{}, d).is_zero());
}

TEST_CASE("Y-variables and the A-monomials") {
  for (auto [type, n] : {std::pair{DynkinType::A, 3}, {DynkinType::D, 4}}) {
    auto c = build_cartan(type, n);
    QuantumTorus t(c);
    std::vector<Vertex> keys;
    for (int r = -6; r <= 6; ++r)
      for (int i = 1; i <= n; ++i)
        if (c.contains(i, r)) keys.push_back({i, r});
    for (const Vertex& a : keys)
      for (const Vertex& b : keys) {
        CAPTURE(to_string(a));
        CAPTURE(to_string(b));
        auto ya = embed_Y(c, ExpVector::unit(a)), yb = embed_Y(c, ExpVector::unit(b));
        CHECK(t.t_commute(ya, yb, c.n_form(a.node, b.node, b.level - a.level)));
      }
    // z_{i,r-1} z_{i,r-3} prod_{j~i} z_{j,r-2}^{-1}
    for (int i = 1; i <= n; ++i) {
      int r = c.parity(i) + 1;
      ExpVector want;
      want.add({i, r - 1}, 1);
      want.add({i, r - 3}, 1);
      for (int j : c.neighbours(i)) want.add({j, r - 2}, -1);
      CHECK(a_monomial(c, i, r) == want);
    }
  }
  auto a1 = build_cartan(DynkinType::A, 1);
  CHECK(embed_Y_exponent(a1, ExpVector::unit({1, 0})) == ExpVector{{{1, 0}, 1}, {{1, 2}, -1}});
  CHECK_THROWS_AS(embed_Y_exponent(a1, ExpVector::unit({1, 1})), DomainError);
  CHECK_THROWS_AS(a_monomial(a1, 1, 0), DomainError);
  CHECK_THROWS_AS(lambda_of(a1, ExpVector::unit({1, 1}), ExpVector::unit({1, 0})), DomainError);
  CHECK(lambda_of(a1, ExpVector::unit({1, 0}), ExpVector::unit({1, 2})) == -1);
}

TEST_CASE("weights") {
  auto a2 = build_cartan(DynkinType::A, 2);
  CHECK(to_string(Weight{{-3, 2}}) == "[-3/2 w1 + w2]");
  CHECK(to_string(Weight{{0, 0}}) == "[0]");
  auto x = TorusElement::monomial(ExpVector{{{1, 2}, 1}, {{2, -1}, -1}});
  WeightExpr w = weight_character(a2, x + x);
  CHECK(w == WeightExpr::single(Weight{{-2, -1}}, 2));

  QuantumTorus t(a2);
  Gen g(a2, -5, 5, 17);
  for (int k = 0; k < 100; ++k) {
    auto a = g.element(2), b = g.element(2);
    CHECK(weight_character(a2, t.multiply(a, b)) ==
          weight_character(a2, a) * weight_character(a2, b));
  }
  WeightExpr sum(2);
  sum.add_term(Weight{{2, 0}}, 2);
  sum.add_term(Weight{{0, 0}}, 1);
  CHECK(to_string(sum) == "[0] + 2[w1]");
  const Weight w1{{1}}, w2{{1, 2}};
  CHECK_THROWS_AS(w1 + w2, DomainError);
  CHECK_THROWS_AS(WeightExpr::fundamental(2, 3, 1), DomainError);
}
