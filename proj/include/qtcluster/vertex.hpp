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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace qtcluster {

/// A vertex (i, r) of the infinite quiver: Dynkin node i at level r.
///
/// Vertices are totally ordered by decreasing level, then increasing node.
/// This is the reading order of the slice matrices and the variable order
/// inside monomials.
struct Vertex {
  int node = 0;
  int level = 0;

  friend bool operator==(const Vertex&, const Vertex&) = default;
  friend std::strong_ordering operator<=>(const Vertex& a, const Vertex& b) {
    if (a.level != b.level) return b.level <=> a.level;
    return a.node <=> b.node;
  }
};

std::string to_string(const Vertex& v);

/// Finitely supported map Vertex -> int, stored sorted by vertex with no
/// zero entries. Doubles as the exponent vector of a Laurent monomial.
class ExpVector {
 public:
  using Entry = std::pair<Vertex, std::int64_t>;

  ExpVector() = default;
  ExpVector(std::initializer_list<Entry> entries);

  static ExpVector unit(Vertex v, std::int64_t exponent = 1);

  std::int64_t operator[](const Vertex& v) const;
  void set(const Vertex& v, std::int64_t exponent);
  void add(const Vertex& v, std::int64_t delta);

  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  ExpVector operator+(const ExpVector& other) const;
  ExpVector operator-(const ExpVector& other) const;
  ExpVector operator-() const;
  ExpVector scaled(std::int64_t factor) const;

  friend bool operator==(const ExpVector&, const ExpVector&) = default;

 private:
  template <typename Op>
  static ExpVector merge(const ExpVector& a, const ExpVector& b, Op op);

  std::vector<Entry> entries_;
};

/// Translation-invariant total order on exponent vectors: compare the
/// exponents at the first vertex (in vertex order) where they differ.
/// a < b implies a + c < b + c, so it is usable for Laurent division.
std::strong_ordering monomial_compare(const ExpVector& a, const ExpVector& b);

struct MonomialLess {
  bool operator()(const ExpVector& a, const ExpVector& b) const {
    return monomial_compare(a, b) < 0;
  }
};

}  // namespace qtcluster
