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

#include "qtcluster/quiver.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <map>

#include "qtcluster/errors.hpp"

namespace qtcluster {

Window gamma_window(int n) {
  if (n < 1) throw DomainError("N must be positive");
  return {-2 * n - 1, 2 * n};
}

Window parse_window(const std::string& text) {
  auto colon = text.find(':', text.empty() ? 0 : 1);
  if (colon == std::string::npos) {
    throw DomainError("window must be written rmin:rmax, got '" + text + "'");
  }
  auto parse = [&](std::string_view part) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (ec != std::errc{} || ptr != part.data() + part.size()) {
      throw DomainError("bad window bound '" + std::string(part) + "'");
    }
    return value;
  };
  std::string_view s(text);
  Window w{parse(s.substr(0, colon)), parse(s.substr(colon + 1))};
  if (w.rmin > w.rmax) throw DomainError("empty window " + text);
  return w;
}

std::string to_string(const Window& w) {
  return std::to_string(w.rmin) + ":" + std::to_string(w.rmax);
}

std::optional<std::size_t> ExchangeMatrix::column_of_row(std::size_t r) const {
  auto it = std::find(col_rows.begin(), col_rows.end(), r);
  if (it == col_rows.end()) return std::nullopt;
  return static_cast<std::size_t>(it - col_rows.begin());
}

IntMatrix ExchangeMatrix::principal() const {
  IntMatrix out(cols(), cols());
  for (std::size_t a = 0; a < cols(); ++a) {
    for (std::size_t c = 0; c < cols(); ++c) out(a, c) = b(col_rows[a], c);
  }
  return out;
}

std::vector<Vertex> QuiverSlice::exchangeable() const {
  std::vector<Vertex> out;
  for (std::size_t r : exchange_.col_rows) out.push_back(vertices_[r]);
  return out;
}

bool QuiverSlice::is_exchangeable(const Vertex& v) const {
  auto r = index_of(v);
  return r && exchange_.column_of_row(*r).has_value();
}

std::optional<std::size_t> QuiverSlice::index_of(const Vertex& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t QuiverSlice::row_of(const Vertex& v) const {
  auto r = index_of(v);
  if (!r) {
    throw DomainError("vertex " + to_string(v) + " is not in the slice " +
                      to_string(window_));
  }
  return *r;
}

std::size_t QuiverSlice::column_of(const Vertex& v) const {
  auto c = exchange_.column_of_row(row_of(v));
  if (!c) throw DomainError("vertex " + to_string(v) + " is frozen");
  return *c;
}

std::vector<std::pair<Vertex, Vertex>> QuiverSlice::arrows() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (std::size_t c = 0; c < exchange_.cols(); ++c) {
    const Vertex& w = vertices_[exchange_.col_rows[c]];
    for (std::size_t r = 0; r < exchange_.rows(); ++r) {
      auto rc = exchange_.column_of_row(r);
      if (rc && *rc <= c) continue;
      std::int64_t e = exchange_.b(r, c);
      for (std::int64_t k = 0; k < std::llabs(e); ++k) {
        if (e > 0) out.emplace_back(vertices_[r], w);
        else out.emplace_back(w, vertices_[r]);
      }
    }
  }
  return out;
}

int b_entry(const CartanData& cartan, const Vertex& row, const Vertex& col) {
  const int i = row.node, j = col.node, r = row.level, s = col.level;
  if (i == j) {
    if (s == r + 2) return 1;
    if (s == r - 2) return -1;
    return 0;
  }
  if (!cartan.adjacent(i, j)) return 0;
  if (s == r - 1) return 1;
  if (s == r + 1) return -1;
  return 0;
}

QuiverSlice build_slice(const CartanData& cartan, const Window& window) {
  if (window.rmin > window.rmax) throw DomainError("empty window");
  QuiverSlice slice;
  slice.cartan_ = cartan;
  slice.window_ = window;

  std::map<int, std::pair<int, int>> column_span;
  for (int r = window.rmax; r >= window.rmin; --r) {
    for (int i = 1; i <= cartan.rank(); ++i) {
      if (!cartan.contains(i, r)) continue;
      slice.vertices_.push_back({i, r});
      auto [it, fresh] = column_span.try_emplace(i, r, r);
      it->second.first = std::min(it->second.first, r);
      it->second.second = std::max(it->second.second, r);
    }
  }

  ExchangeMatrix& ex = slice.exchange_;
  for (std::size_t k = 0; k < slice.vertices_.size(); ++k) {
    const Vertex& v = slice.vertices_[k];
    auto [lo, hi] = column_span.at(v.node);
    if (v.level != lo && v.level != hi) ex.col_rows.push_back(k);
  }
  ex.b = IntMatrix(slice.vertices_.size(), ex.col_rows.size());
  for (std::size_t r = 0; r < slice.vertices_.size(); ++r) {
    for (std::size_t c = 0; c < ex.col_rows.size(); ++c) {
      ex.b(r, c) =
          b_entry(cartan, slice.vertices_[r], slice.vertices_[ex.col_rows[c]]);
    }
  }
  return slice;
}

QuiverSlice build_slice(const CartanData& cartan, int n) {
  return build_slice(cartan, gamma_window(n));
}

namespace {

void check_column(const ExchangeMatrix& b, std::size_t k) {
  if (k >= b.cols()) {
    throw DomainError("mutation direction " + std::to_string(k) +
                      " is not an exchangeable index");
  }
  if (b.col_rows.size() != b.cols()) {
    throw DomainError("exchange matrix column labels are inconsistent");
  }
}

}  // namespace

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k) {
  check_column(b, k);
  const std::size_t kr = b.col_rows[k];
  ExchangeMatrix out = b;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (i == kr || j == k) {
        out.b(i, j) = -b.b(i, j);
        continue;
      }
      std::int64_t bik = b.b(i, k), bkj = b.b(kr, j);
      std::int64_t delta = checked_add(checked_mul(std::llabs(bik), bkj),
                                       checked_mul(bik, std::llabs(bkj)));
      out.b(i, j) = checked_add(b.b(i, j), delta / 2);
    }
  }
  return out;
}

IntMatrix e_matrix(const ExchangeMatrix& b, std::size_t k) {
  check_column(b, k);
  const std::size_t kr = b.col_rows[k];
  IntMatrix e = IntMatrix::identity(b.rows());
  e(kr, kr) = -1;
  for (std::size_t i = 0; i < b.rows(); ++i) {
    if (i != kr) e(i, kr) = std::max<std::int64_t>(0, -b.b(i, k));
  }
  return e;
}

IntMatrix f_matrix(const ExchangeMatrix& b, std::size_t k) {
  check_column(b, k);
  const std::size_t kr = b.col_rows[k];
  IntMatrix f = IntMatrix::identity(b.cols());
  f(k, k) = -1;
  for (std::size_t j = 0; j < b.cols(); ++j) {
    if (j != k) f(k, j) = std::max<std::int64_t>(0, b.b(kr, j));
  }
  return f;
}

}  // namespace qtcluster
