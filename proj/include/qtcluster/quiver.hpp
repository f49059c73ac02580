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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qtcluster/cartan.hpp"
#include "qtcluster/int_matrix.hpp"
#include "qtcluster/vertex.hpp"

namespace qtcluster {

/// Closed range of levels [rmin, rmax].
struct Window {
  int rmin = 0;
  int rmax = 0;

  bool contains(int r) const { return rmin <= r && r <= rmax; }
  friend bool operator==(const Window&, const Window&) = default;
};

/// The window of Gamma_N: -2N-1 <= r < 2N+1.
Window gamma_window(int n);
/// Parses "rmin:rmax".
Window parse_window(const std::string& text);
std::string to_string(const Window& w);

/// Exchange matrix with rows indexed by all vertices of a slice and columns
/// by the exchangeable ones. col_rows[c] is the row of the vertex labelling
/// column c.
struct ExchangeMatrix {
  IntMatrix b;
  std::vector<std::size_t> col_rows;

  std::size_t rows() const { return b.rows(); }
  std::size_t cols() const { return b.cols(); }
  /// Column of the vertex in row r, if exchangeable.
  std::optional<std::size_t> column_of_row(std::size_t r) const;
  /// Principal part: rows restricted to exchangeable vertices.
  IntMatrix principal() const;

  friend bool operator==(const ExchangeMatrix&, const ExchangeMatrix&) = default;
};

/// Finite slice of the infinite quiver: every (i, r) of the chosen
/// component with r in the window. In each node column the top and bottom
/// vertex are frozen.
class QuiverSlice {
 public:
  const CartanData& cartan() const { return cartan_; }
  const Window& window() const { return window_; }

  /// Ordered by decreasing level, then increasing node.
  const std::vector<Vertex>& vertices() const { return vertices_; }
  /// Exchangeable vertices in column order.
  std::vector<Vertex> exchangeable() const;
  bool is_exchangeable(const Vertex& v) const;

  std::optional<std::size_t> index_of(const Vertex& v) const;
  /// Row index; throws DomainError when v is outside the slice.
  std::size_t row_of(const Vertex& v) const;
  /// Column index; throws DomainError when v is frozen or outside.
  std::size_t column_of(const Vertex& v) const;

  const ExchangeMatrix& exchange() const { return exchange_; }

  /// Arrows i -> j with the multiplicity b_ij > 0, among all vertices.
  /// Arrows between two frozen vertices are not represented.
  std::vector<std::pair<Vertex, Vertex>> arrows() const;

 private:
  friend QuiverSlice build_slice(const CartanData& cartan, const Window& window);

  CartanData cartan_;
  Window window_;
  std::vector<Vertex> vertices_;
  ExchangeMatrix exchange_;
};

QuiverSlice build_slice(const CartanData& cartan, const Window& window);
QuiverSlice build_slice(const CartanData& cartan, int n);

/// Entry of the infinite exchange matrix at ((i, r), (j, s)).
int b_entry(const CartanData& cartan, const Vertex& row, const Vertex& col);

/// Matrix mutation in direction of column k.
ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, std::size_t k);
/// m x m matrix E_k.
IntMatrix e_matrix(const ExchangeMatrix& b, std::size_t k);
/// n x n matrix F_k.
IntMatrix f_matrix(const ExchangeMatrix& b, std::size_t k);

}  // namespace qtcluster
