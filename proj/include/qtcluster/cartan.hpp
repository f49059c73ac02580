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
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtcluster/int_matrix.hpp"

namespace qtcluster {

enum class DynkinType { A, D, E };

std::string to_string(DynkinType type);
DynkinType parse_dynkin_type(std::string_view label);

/// Cartan data of a simply-laced simple Lie algebra together with the
/// power-series coefficients of the inverse quantum Cartan matrix.
///
/// Nodes are numbered 1..n following Bourbaki:
///   A_n: 1 - 2 - ... - n
///   D_n: 1 - 2 - ... - (n-2), with (n-2) joined to both n-1 and n
///   E_n: 1 - 3 - 4 - 5 - ... - n, with 2 attached to 4
///
/// The parity class of node i is its graph distance to node 1 modulo 2. The
/// vertex (i, r) of the infinite quiver exists iff r has the parity of i's
/// class, which selects the connected component containing (1, 0).
///
/// Copies share the coefficient cache. The cache is filled on demand under a
/// lock and is safe to read from several threads.
class CartanData {
 public:
  DynkinType type() const { return type_; }
  int rank() const { return rank_; }
  std::string label() const;

  /// Cartan matrix entry C_ij, nodes 1-based.
  int entry(int i, int j) const;
  const IntMatrix& matrix() const { return cartan_; }

  bool adjacent(int i, int j) const;
  const std::vector<int>& neighbours(int i) const;
  /// Unordered edges {i, j} with i < j.
  std::vector<std::pair<int, int>> edges() const;

  int dual_coxeter() const;

  /// 0 or 1; parity of the distance from node 1.
  int parity(int i) const;
  /// True iff (i, r) lies in the chosen component of the infinite quiver.
  bool contains(int node, int level) const;

  /// Coefficient of z^m in the (i, j) entry of the inverse quantum Cartan
  /// matrix, m >= 0. Computed by the three-term recurrence
  ///   C~ij(m+1) = -C~ij(m-1) + sum_{k ~ j} C~ik(m),  C~ij(0)=0, C~ij(1)=d_ij.
  std::int64_t ctilde(int i, int j, int m) const;

  /// Skew form governing the Y-variables: C~ij(m+1) - C~ij(m-1) for m > 0,
  /// extended by N(0) = 0 and N(-m) = -N(m).
  std::int64_t n_form(int i, int j, int m) const;

  /// Skew form governing the z-variables: for m >= 0,
  ///   F_ij(m) = -sum_{k >= 1, 2k-1 <= m} C~ij(m - 2k + 1),
  /// extended by F(-m) = -F(m). The argument is the raw level gap s - r.
  std::int64_t f_form(int i, int j, int m) const;

  void check_node(int i) const;

 private:
  friend CartanData build_cartan(DynkinType type, int rank);
  struct SeriesCache;

  DynkinType type_ = DynkinType::A;
  int rank_ = 0;
  IntMatrix cartan_;
  std::vector<std::vector<int>> neighbours_;
  std::vector<int> parity_;
  std::shared_ptr<SeriesCache> cache_;
};

/// Accepts A_n (n >= 1), D_n (n >= 4) and E_6, E_7, E_8.
CartanData build_cartan(DynkinType type, int rank);

}  // namespace qtcluster
