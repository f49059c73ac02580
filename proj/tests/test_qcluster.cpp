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
#include <random>

#include "qtcluster/errors.hpp"
#include "qtcluster/qcluster.hpp"

using namespace qtcluster;

namespace {

struct Factor {
  int i, r, e;
};

ExpVector exps(std::initializer_list<Factor> fs) {
  ExpVector out;
  for (auto f : fs) out.add({f.i, f.r}, f.e);
  return out;
}

LaurentPolynomial poly(std::initializer_list<std::initializer_list<Factor>> terms) {
  LaurentPolynomial out;
  for (auto t : terms) out.add_term(exps(t), 1);
  return out;
}

std::vector<Vertex> random_path(const QuiverSlice& s, std::mt19937_64& rng, int len) {
  auto ex = s.exchangeable();
  std::vector<Vertex> path;
  while (static_cast<int>(path.size()) < len) {
    Vertex v = ex[rng() % ex.size()];
    if (!path.empty() && path.back() == v) continue;
    path.push_back(v);
  }
  return path;
}

}  // namespace

TEST_CASE("A1 exchange relation") {
  auto s = build_slice(build_cartan(DynkinType::A, 1), 1);
  auto seed = initial_seed(s);
  CHECK(seed.var({1, 0}) == TorusElement::monomial(ExpVector::unit({1, 0})));
  auto m = mutate(seed, {1, 0});
  TorusElement want = TorusElement::monomial(exps({{1, -2, 1}, {1, 0, -1}})) +
                      TorusElement::monomial(exps({{1, 0, -1}, {1, 2, 1}}));
  CHECK(m.var({1, 0}) == want);
  CHECK(m.var({1, 2}) == seed.var({1, 2}));
  CHECK(m.history() == std::vector<Vertex>{{1, 0}});
  CHECK(check_commutation(m).empty());
  CHECK_THROWS_WITH_AS(mutate(seed, {1, 2}), doctest::Contains("frozen"), DomainError);
  CHECK_THROWS_AS(seed.var({1, 4}), DomainError);
}

TEST_CASE("sl3 variables") {
  auto s = build_slice(build_cartan(DynkinType::A, 2), Window{-1, 6});
  const std::vector<Vertex> path{{1, 4}, {1, 2}, {2, 3}, {2, 1}, {1, 4}};
  auto at = [&](std::size_t steps) {
    std::vector<Vertex> p(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(steps));
    return classical_mutate_along(s, p).at(p.back());
  };
  CHECK(at(1) == poly({{{1, 2, 1}, {1, 4, -1}, {2, 5, 1}},
                       {{1, 4, -1}, {1, 6, 1}, {2, 3, 1}}}));
  // After mu_(1,4) the vertex (1,2) has in-arrows from (1,0), (1,4) and
  // out-arrows to (2,1), (1,6).
  CHECK(at(2) == poly({{{1, 0, 1}, {1, 4, -1}, {2, 5, 1}},
                       {{1, 0, 1}, {1, 2, -1}, {1, 4, -1}, {1, 6, 1}, {2, 3, 1}},
                       {{1, 2, -1}, {1, 6, 1}, {2, 1, 1}}}));
  CHECK(at(3) == poly({{{2, 1, 1}, {2, 3, -1}},
                       {{1, 2, 1}, {1, 4, -1}, {2, 5, 1}, {2, 3, -1}},
                       {{1, 4, -1}, {1, 6, 1}}}));
  CHECK(at(5) == poly({{{1, 0, 1}, {1, 2, -1}},
                       {{1, 2, -1}, {1, 4, 1}, {2, 1, 1}, {2, 3, -1}},
                       {{2, 3, -1}, {2, 5, 1}}}));
}

TEST_CASE("quantum mutation specialises to classical mutation") {
  std::mt19937_64 rng(99);
  for (auto [t, n] : {std::pair{DynkinType::A, 2}, {DynkinType::A, 3}, {DynkinType::D, 4}}) {
    auto s = build_slice(build_cartan(t, n), 1);
    auto seed = initial_seed(s);
    for (int run = 0; run < 8; ++run) {
      auto path = random_path(s, rng, 4);
      CAPTURE(to_string(path));
      auto q = mutate_along(seed, path);
      auto cl = classical_mutate_along(s, path);
      for (const Vertex& v : s.vertices()) {
        CHECK(evaluate_t1(q.var(v)) == cl.at(v));
        CHECK(check_variable(q.var(v)).ok());
      }
      CHECK(check_commutation(q).empty());
    }
  }
}

TEST_CASE("mutation is an involution") {
  std::mt19937_64 rng(5);
  auto s = build_slice(build_cartan(DynkinType::A, 3), 1);
  auto seed = initial_seed(s);
  for (int run = 0; run < 10; ++run) {
    auto path = random_path(s, rng, 3);
    auto q = mutate_along(seed, path);
    auto back = mutate(mutate(q, path.back()), path.back());
    for (std::size_t r = 0; r < q.size(); ++r) CHECK(back.var_at(r) == q.var_at(r));
    CHECK(back.b() == q.b());
    CHECK(back.lambda() == q.lambda());
  }
}

TEST_CASE("variable checks") {
  auto x = TorusElement::monomial(ExpVector::unit({1, 0}));
  CHECK(check_variable(x).ok());
  auto skewed = TorusElement::monomial(ExpVector::unit({1, 0}), TCoeff::monomial(1, 1));
  CHECK_FALSE(check_variable(skewed).bar_invariant);
  auto neg = TorusElement::monomial(ExpVector::unit({1, 0}), TCoeff::monomial(-1));
  CHECK_FALSE(check_variable(neg).positive);
  auto mixed = TorusElement::monomial(ExpVector::unit({1, 0}), TCoeff::from_coeffs(-1, {1, 1, 1}));
  CHECK(check_variable(mixed).bar_invariant);
  CHECK_FALSE(check_variable(mixed).single_parity);
}

TEST_CASE("seed cache under concurrent use") {
  auto s = build_slice(build_cartan(DynkinType::A, 3), 2);
  auto seed = initial_seed(s);
  std::mt19937_64 rng(42);
  std::vector<std::vector<Vertex>> paths;
  auto base = random_path(s, rng, 3);
  for (int k = 0; k < 12; ++k) {
    auto tail = random_path(s, rng, 3);
    auto p = base;
    if (tail.front() == p.back()) tail.erase(tail.begin());
    p.insert(p.end(), tail.begin(), tail.end());
    paths.push_back(p);
  }
  SeedCache cache;
  std::vector<std::future<QuantumSeed>> jobs;
  for (const auto& p : paths)
    jobs.push_back(std::async(std::launch::async, [&, p] { return mutate_along(seed, p, &cache); }));
  for (std::size_t k = 0; k < paths.size(); ++k) {
    auto cached = jobs[k].get();
    auto plain = mutate_along(seed, paths[k]);
    CHECK(cached.history() == paths[k]);
    for (std::size_t r = 0; r < plain.size(); ++r) CHECK(cached.var_at(r) == plain.var_at(r));
  }
  CHECK(cache.size() >= 3);
  CHECK(cache.find(cache_key(s, base)) != nullptr);
}

TEST_CASE("paths") {
  auto p = parse_path("(1,4);(1, 2) (2,3),(2,-1)");
  CHECK(p == std::vector<Vertex>{{1, 4}, {1, 2}, {2, 3}, {2, -1}});
  CHECK(parse_path(to_string(p)) == p);
  CHECK(parse_path("").empty());
  CHECK_THROWS_AS(parse_path("(1,4);x"), DomainError);
}

TEST_CASE("classical division") {
  auto d = poly({{{1, 0, 1}}, {{1, 2, 1}}});
  auto q = poly({{{2, 1, 1}}, {{1, 2, -1}, {2, 3, 1}}});
  CHECK(classical_divide(d * q, d) == q);
  CHECK_THROWS_AS(classical_divide(d + poly({{{2, 1, 1}}}), d), InvariantError);
  CHECK_THROWS_AS(classical_divide(d, LaurentPolynomial{}), DomainError);
}
