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

#include <thread>
#include <vector>

#include "qtcluster/cartan.hpp"
#include "qtcluster/errors.hpp"
#include "qtcluster/int_matrix.hpp"

using namespace qtcluster;

namespace {

// Power-series coefficients of the inverse of (z + 1/z) I - A, from the
// matrix recurrence X(m+1) = A X(m) - X(m-1), X(0) = 0, X(1) = I.
std::vector<IntMatrix> inverse_series(const CartanData& c, int degree) {
  const auto n = static_cast<std::size_t>(c.rank());
  IntMatrix adj(n, n);
  for (auto [i, j] : c.edges()) {
    adj(i - 1, j - 1) = 1;
    adj(j - 1, i - 1) = 1;
  }
  std::vector<IntMatrix> out{IntMatrix(n, n), IntMatrix::identity(n)};
  for (int m = 1; m < degree; ++m) {
    IntMatrix next = adj * out[m];
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) next(a, b) -= out[m - 1](a, b);
    out.push_back(next);
  }
  return out;
}

std::vector<CartanData> small_types() {
  std::vector<CartanData> out;
  for (int n = 1; n <= 6; ++n) out.push_back(build_cartan(DynkinType::A, n));
  for (int n = 4; n <= 6; ++n) out.push_back(build_cartan(DynkinType::D, n));
  for (int n = 6; n <= 8; ++n) out.push_back(build_cartan(DynkinType::E, n));
  return out;
}

}  // namespace

TEST_CASE("A1 and A2 series") {
  auto a1 = build_cartan(DynkinType::A, 1);
  const std::int64_t want1[] = {0, 1, 0, -1, 0, 1, 0, -1, 0, 1, 0, -1};
  for (int m = 0; m <= 11; ++m) CHECK(a1.ctilde(1, 1, m) == want1[m]);

  auto a2 = build_cartan(DynkinType::A, 2);
  // z - z^5 + z^7 - z^11 + z^13 and z^2 - z^4 + z^8 - z^10 + z^14
  const std::int64_t diag[] = {0, 1, 0, 0, 0, -1, 0, 1, 0, 0, 0, -1, 0, 1, 0};
  const std::int64_t off[] = {0, 0, 1, 0, -1, 0, 0, 0, 1, 0, -1, 0, 0, 0, 1};
  for (int m = 0; m <= 14; ++m) {
    CHECK(a2.ctilde(1, 1, m) == diag[m]);
    CHECK(a2.ctilde(2, 2, m) == diag[m]);
    CHECK(a2.ctilde(1, 2, m) == off[m]);
    CHECK(a2.ctilde(2, 1, m) == off[m]);
  }
}

TEST_CASE("ctilde agrees with the matrix series") {
  for (const auto& c : small_types()) {
    CAPTURE(c.label());
    auto series = inverse_series(c, 70);
    for (int m = 0; m < 70; ++m)
      for (int i = 1; i <= c.rank(); ++i)
        for (int j = 1; j <= c.rank(); ++j)
          REQUIRE(c.ctilde(i, j, m) == series[m](i - 1, j - 1));
  }
}

TEST_CASE("ctilde is 2h-periodic and non-negative below h") {
  for (const auto& c : small_types()) {
    CAPTURE(c.label());
    const int h = c.dual_coxeter();
    for (int i = 1; i <= c.rank(); ++i)
      for (int j = 1; j <= c.rank(); ++j) {
        for (int m = 0; m < 2 * h; ++m)
          CHECK(c.ctilde(i, j, m + 2 * h) == c.ctilde(i, j, m));
        for (int m = 0; m < h; ++m) CHECK(c.ctilde(i, j, m) >= 0);
        CHECK(c.ctilde(i, j, h) == 0);
      }
  }
}

TEST_CASE("skew forms") {
  for (const auto& c : small_types()) {
    CAPTURE(c.label());
    auto series = inverse_series(c, 45);
    for (int i = 1; i <= c.rank(); ++i)
      for (int j = 1; j <= c.rank(); ++j) {
        CHECK(c.n_form(i, j, 0) == 0);
        CHECK(c.f_form(i, j, 0) == 0);
        for (int m = 1; m <= 40; ++m) {
          CHECK(c.n_form(i, j, m) ==
                series[m + 1](i - 1, j - 1) - series[m - 1](i - 1, j - 1));
          CHECK(c.n_form(i, j, -m) == -c.n_form(i, j, m));
          std::int64_t f = 0;
          for (int k = 1; 2 * k - 1 <= m; ++k) f -= series[m - 2 * k + 1](i - 1, j - 1);
          CHECK(c.f_form(i, j, m) == f);
          CHECK(c.f_form(i, j, -m) == -f);
          CHECK(c.f_form(j, i, m) == f);
        }
      }
  }
  auto a1 = build_cartan(DynkinType::A, 1);
  CHECK(a1.f_form(1, 1, 2) == -1);
  CHECK(a1.f_form(1, 1, 4) == 0);
  CHECK(a1.f_form(1, 1, 6) == -1);
}

TEST_CASE("Dynkin data") {
  CHECK(build_cartan(DynkinType::A, 4).dual_coxeter() == 5);
  CHECK(build_cartan(DynkinType::D, 5).dual_coxeter() == 8);
  CHECK(build_cartan(DynkinType::E, 6).dual_coxeter() == 12);
  CHECK(build_cartan(DynkinType::E, 7).dual_coxeter() == 18);
  CHECK(build_cartan(DynkinType::E, 8).dual_coxeter() == 30);

  auto d4 = build_cartan(DynkinType::D, 4);
  CHECK(d4.label() == "D4");
  CHECK(d4.neighbours(2) == std::vector<int>{1, 3, 4});
  CHECK(d4.parity(1) == 0);
  CHECK(d4.parity(2) == 1);
  CHECK(d4.parity(4) == 0);
  CHECK(d4.contains(2, 1));
  CHECK_FALSE(d4.contains(2, 0));
  CHECK(d4.contains(1, -4));
  CHECK(d4.entry(2, 2) == 2);
  CHECK(d4.entry(1, 2) == -1);
  CHECK(d4.entry(1, 3) == 0);

  auto e6 = build_cartan(DynkinType::E, 6);
  CHECK(e6.neighbours(4) == std::vector<int>{2, 3, 5});
  CHECK(e6.parity(2) == 1);
  CHECK(e6.parity(4) == 0);

  CHECK(parse_dynkin_type("d") == DynkinType::D);
  CHECK_THROWS_AS(parse_dynkin_type("B"), DomainError);
  CHECK_THROWS_AS(build_cartan(DynkinType::A, 0), DomainError);
  CHECK_THROWS_AS(build_cartan(DynkinType::D, 3), DomainError);
  CHECK_THROWS_AS(build_cartan(DynkinType::E, 9), DomainError);
  CHECK_THROWS_AS(d4.check_node(0), DomainError);
  CHECK_THROWS_AS(d4.ctilde(1, 5, 2), DomainError);
  CHECK_THROWS_AS(d4.ctilde(1, 1, -1), DomainError);
}

TEST_CASE("series cache is safe to share between threads") {
  auto e8 = build_cartan(DynkinType::E, 8);
  auto series = inverse_series(e8, 121);
  std::vector<int> bad(8, 0);
  std::vector<std::thread> pool;
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&, t] {
      for (int m = 120 - t; m >= 0; m -= 3)
        for (int i = 1; i <= 8; ++i)
          for (int j = 1; j <= 8; ++j)
            if (e8.ctilde(i, j, m) != series[m](i - 1, j - 1)) ++bad[t];
    });
  }
  for (auto& th : pool) th.join();
  for (int b : bad) CHECK(b == 0);
}
