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

#include <future>

#include "qtcluster/errors.hpp"
#include "qtcluster/repchar.hpp"

using namespace qtcluster;

namespace {

std::int64_t dimension(const LaurentPolynomial& p) {
  std::int64_t d = 0;
  for (const auto& [e, c] : p.terms()) d += c;
  return d;
}

std::int64_t binomial(int n, int k) {
  std::int64_t out = 1;
  for (int j = 1; j <= k; ++j) out = out * (n - k + j) / j;
  return out;
}

}  // namespace

TEST_CASE("mutation sequences") {
  auto a1 = build_cartan(DynkinType::A, 1);
  auto s1 = mutation_sequence(a1, 1, 0);
  CHECK(s1.h_prime == 1);
  CHECK(s1.sequence == std::vector<Vertex>{{1, 2}});
  CHECK(s1.read_vertex() == Vertex{1, 2});

  auto a2 = build_cartan(DynkinType::A, 2);
  auto s2 = mutation_sequence(a2, 1, 0);
  CHECK(s2.h_prime == 2);
  CHECK(s2.column_order == std::vector<int>{1, 2});
  CHECK(s2.sequence == std::vector<Vertex>{{1, 4}, {1, 2}, {2, 3}, {2, 1}, {1, 4}});
  CHECK(default_window(a2, 1, 0) == Window{-1, 6});

  auto d4 = build_cartan(DynkinType::D, 4);
  auto s4 = mutation_sequence(d4, 1, 0);
  CHECK(s4.h_prime == 3);
  CHECK(s4.column_order == std::vector<int>{1, 3, 4, 2});
  CHECK(s4.sequence.size() == 4 * (3 + 2) + 1);
  CHECK(s4.sequence.front() == Vertex{1, 6});
  CHECK(s4.sequence.back() == Vertex{1, 6});

  auto e6 = build_cartan(DynkinType::E, 6);
  CHECK(mutation_sequence(e6, 1, 0).h_prime == 6);
  CHECK_THROWS_AS(mutation_sequence(a2, 1, 1), DomainError);
}

TEST_CASE("Frenkel-Mukhin oracle") {
  auto a2 = build_cartan(DynkinType::A, 2);
  LaurentPolynomial want;
  want.add_term(ExpVector{{{1, 0}, 1}}, 1);
  want.add_term(ExpVector{{{1, 2}, -1}, {{2, 1}, 1}}, 1);
  want.add_term(ExpVector{{{2, 3}, -1}}, 1);
  CHECK(classical_fm_qchar(a2, 1, 0) == want);

  for (int n = 1; n <= 5; ++n) {
    auto c = build_cartan(DynkinType::A, n);
    for (int i = 1; i <= n; ++i) CHECK(dimension(classical_fm_qchar(c, i, c.parity(i))) == binomial(n + 1, i));
  }
  auto d4 = build_cartan(DynkinType::D, 4);
  CHECK(dimension(classical_fm_qchar(d4, 1, 0)) == 8);
  CHECK(dimension(classical_fm_qchar(d4, 2, 1)) == 29);
  CHECK(dimension(classical_fm_qchar(build_cartan(DynkinType::D, 5), 1, 0)) == 10);
  CHECK(dimension(classical_fm_qchar(build_cartan(DynkinType::E, 6), 1, 0)) == 27);
  CHECK_THROWS_AS(classical_fm_qchar(d4, 2, 1, 5), InvariantError);
  CHECK_THROWS_AS(classical_fm_qchar(d4, 2, 0), DomainError);
}

TEST_CASE("A1 fundamental character") {
  auto a1 = build_cartan(DynkinType::A, 1);
  auto ch = fundamental_qt_character(a1, 1, -2);
  CHECK(ch.vertex_read == Vertex{1, 0});
  CHECK(ch.window == Window{-3, 2});
  TorusElement want = TorusElement::monomial(ExpVector{{{1, -2}, 1}, {{1, 0}, -1}}) +
                      TorusElement::monomial(ExpVector{{{1, 0}, -1}, {{1, 2}, 1}});
  CHECK(ch.value == want);
}

TEST_CASE("fundamental characters match the classical oracle") {
  std::vector<CartanData> types;
  for (int n = 1; n <= 4; ++n) types.push_back(build_cartan(DynkinType::A, n));
  types.push_back(build_cartan(DynkinType::D, 4));
  for (const auto& c : types) {
    for (int i = 1; i <= c.rank(); ++i) {
      for (int r : {-2, 0}) {
        r += c.parity(i);
        CAPTURE(c.label());
        CAPTURE(i);
        CAPTURE(r);
        auto ch = fundamental_qt_character(c, i, r);
        CHECK(evaluate_t1(ch.value) == embed_Y(c, classical_fm_qchar(c, i, r)));
        for (const auto& [e, coef] : ch.value.terms()) {
          CHECK(coef.non_negative());
          CHECK(coef == coef.bar());
          if (c.type() == DynkinType::A) CHECK(coef.is_one());
        }
      }
    }
  }
}

TEST_CASE("windows and shared caches") {
  auto a2 = build_cartan(DynkinType::A, 2);
  CHECK_THROWS_WITH_AS(fundamental_qt_character(a2, 1, 0, Window{-1, 4}),
                       doctest::Contains("too small"), DomainError);
  auto wide = fundamental_qt_character(a2, 1, 0, Window{-5, 10});
  CHECK(wide.value == fundamental_qt_character(a2, 1, 0).value);

  auto a3 = build_cartan(DynkinType::A, 3);
  SeedCache cache;
  std::vector<std::future<QtCharacter>> jobs;
  for (int k = 0; k < 6; ++k) {
    int i = 1 + k % 3;
    jobs.push_back(std::async(std::launch::async, [&, i] {
      return fundamental_qt_character(a3, i, a3.parity(i), std::nullopt, &cache);
    }));
  }
  for (int k = 0; k < 6; ++k) {
    int i = 1 + k % 3;
    CHECK(jobs[static_cast<std::size_t>(k)].get().value ==
          fundamental_qt_character(a3, i, a3.parity(i)).value);
  }
}

TEST_CASE("prefundamental data") {
  auto a1 = build_cartan(DynkinType::A, 1);
  auto p = prefundamental_qt_character(a1, 1, 2, 3);
  CHECK(p.monomial == TorusElement::monomial(ExpVector::unit({1, 2})));
  CHECK(p.psi_weight == Weight{{2}});
  CHECK(p.chi.terms().size() == 4);
  CHECK(p.chi.terms().count(Weight{{-12}}) == 1);
  CHECK_THROWS_AS(prefundamental_qt_character(build_cartan(DynkinType::A, 2), 1, 0, 2), DomainError);
  CHECK_THROWS_AS(prefundamental_qt_character(a1, 1, 1, 2), DomainError);
  CHECK_THROWS_AS(prefundamental_qt_character(a1, 1, 0, -1), DomainError);
}

TEST_CASE("Baxter relation") {
  for (int r = -2; r <= 2; ++r) {
    CAPTURE(r);
    auto rep = baxter_check(r);
    CHECK(rep.pass());
    CHECK(rep.checks.size() == 3);
    CHECK_FALSE(baxter_check(r, BaxterVariant::SwappedPowers).pass());
  }
}

TEST_CASE("Drinfeld double relations") {
  auto minus = drinfeld_double_check(-1);
  CHECK(minus.pass());
  CHECK(minus.checks.size() == 7);
  // The reference Casimir has the t-powers exchanged and does not vanish.
  CHECK_FALSE(minus.reference_casimir.pass);
  CHECK_FALSE(drinfeld_double_check(1).pass());
  CHECK_THROWS_AS(drinfeld_double_check(0), DomainError);
}

TEST_CASE("thinness in type A") {
  auto rep = thinness_flatten_check(build_cartan(DynkinType::A, 3), 2, 1);
  CHECK(rep.pass);
  CHECK_THROWS_AS(thinness_flatten_check(build_cartan(DynkinType::D, 4), 1, 0), DomainError);
}
