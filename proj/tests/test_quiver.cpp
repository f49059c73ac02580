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

#include <cstdlib>
#include <random>
#include <set>

#include "qtcluster/errors.hpp"
#include "qtcluster/quiver.hpp"

using namespace qtcluster;

namespace {

// Arrows (i,r) -> (i,r+2) and (i,r) -> (j,r-1) for i ~ j.
int arrow_count(const CartanData& c, const Vertex& a, const Vertex& b) {
  if (a.node == b.node) return b.level == a.level + 2 ? 1 : 0;
  return c.adjacent(a.node, b.node) && b.level == a.level - 1 ? 1 : 0;
}

IntMatrix naive_mutation(const IntMatrix& b, std::size_t row_k, std::size_t k) {
  IntMatrix out = b;
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i == row_k || j == k) {
        out(i, j) = -b(i, j);
      } else {
        std::int64_t p = b(i, k), q = b(row_k, j);
        out(i, j) = b(i, j) + (std::llabs(p) * q + p * std::llabs(q)) / 2;
      }
    }
  return out;
}

}  // namespace

TEST_CASE("windows") {
  CHECK(gamma_window(1) == Window{-3, 2});
  CHECK(gamma_window(3) == Window{-7, 6});
  CHECK(parse_window("-5:2") == Window{-5, 2});
  CHECK(to_string(Window{-5, 2}) == "-5:2");
  CHECK_THROWS_AS(parse_window("3"), DomainError);
  CHECK_THROWS_AS(parse_window("a:2"), DomainError);
  CHECK_THROWS_AS(parse_window("4:2"), DomainError);
  CHECK_THROWS_AS(gamma_window(0), DomainError);
}

TEST_CASE("A1 slice") {
  auto s = build_slice(build_cartan(DynkinType::A, 1), 1);
  REQUIRE(s.vertices().size() == 3);
  CHECK(s.vertices()[0] == Vertex{1, 2});
  CHECK(s.vertices()[2] == Vertex{1, -2});
  CHECK(s.exchangeable() == std::vector<Vertex>{{1, 0}});
  CHECK(s.exchange().b.to_rows() ==
        std::vector<std::vector<std::int64_t>>{{-1}, {0}, {1}});
  CHECK_THROWS_WITH_AS(s.column_of({1, 2}), doctest::Contains("frozen"), DomainError);
  CHECK_THROWS_AS(s.row_of({1, 4}), DomainError);
  CHECK_FALSE(s.index_of({1, 1}).has_value());
}

TEST_CASE("slice structure matches the quiver") {
  for (auto [t, n] : {std::pair{DynkinType::A, 3}, {DynkinType::D, 4},
                      {DynkinType::D, 5}, {DynkinType::E, 6}}) {
    auto c = build_cartan(t, n);
    for (int N = 1; N <= 3; ++N) {
      CAPTURE(c.label());
      CAPTURE(N);
      auto s = build_slice(c, N);
      const auto& vs = s.vertices();
      std::set<Vertex> seen(vs.begin(), vs.end());
      CHECK(seen.size() == vs.size());
      for (std::size_t k = 1; k < vs.size(); ++k) {
        bool ordered = vs[k - 1].level > vs[k].level ||
                       (vs[k - 1].level == vs[k].level && vs[k - 1].node < vs[k].node);
        CHECK(ordered);
      }
      for (int i = 1; i <= n; ++i)
        for (int r = -2 * N - 1; r <= 2 * N; ++r)
          CHECK(seen.count({i, r}) == (c.contains(i, r) ? 1u : 0u));
      // Frozen vertices: top and bottom of every column.
      CHECK(s.exchangeable().size() == vs.size() - 2 * static_cast<std::size_t>(n));
      for (const Vertex& v : vs) {
        bool interior = seen.count({v.node, v.level + 2}) && seen.count({v.node, v.level - 2});
        CHECK(s.is_exchangeable(v) == interior);
      }
      const auto& b = s.exchange();
      for (std::size_t r = 0; r < vs.size(); ++r)
        for (std::size_t col = 0; col < b.cols(); ++col) {
          const Vertex& w = vs[b.col_rows[col]];
          int want = arrow_count(c, vs[r], w) - arrow_count(c, w, vs[r]);
          CHECK(b.b(r, col) == want);
          CHECK(b_entry(c, vs[r], w) == want);
        }
      CHECK(b.principal().is_skew_symmetric());
    }
  }
}

TEST_CASE("arrows") {
  auto s = build_slice(build_cartan(DynkinType::A, 2), Window{-1, 2});
  auto arrows = s.arrows();
  std::set<std::pair<Vertex, Vertex>> got(arrows.begin(), arrows.end());
  CHECK(got.size() == arrows.size());
  for (const auto& [a, b] : arrows)
    CHECK(arrow_count(s.cartan(), a, b) == 1);
}

TEST_CASE("matrix mutation") {
  auto c = build_cartan(DynkinType::D, 4);
  auto s = build_slice(c, 2);
  std::mt19937_64 rng(7);
  ExchangeMatrix b = s.exchange();
  for (int step = 0; step < 60; ++step) {
    if (step % 6 == 0) b = s.exchange();
    std::size_t k = rng() % b.cols();
    ExchangeMatrix m = mutate_matrix(b, k);
    CHECK(m.b == naive_mutation(b.b, b.col_rows[k], k));
    CHECK(m.b == e_matrix(b, k) * b.b * f_matrix(b, k));
    CHECK(mutate_matrix(m, k) == b);
    CHECK(m.principal().is_skew_symmetric());
    b = m;
  }
  CHECK_THROWS_AS(mutate_matrix(b, b.cols()), DomainError);
}
