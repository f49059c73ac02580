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

#include "qtcluster/vertex.hpp"

#include <algorithm>

#include "qtcluster/int_matrix.hpp"

namespace qtcluster {

std::string to_string(const Vertex& v) {
  return "(" + std::to_string(v.node) + "," + std::to_string(v.level) + ")";
}

ExpVector::ExpVector(std::initializer_list<Entry> entries) {
  for (const auto& [v, e] : entries) add(v, e);
}

ExpVector ExpVector::unit(Vertex v, std::int64_t exponent) {
  ExpVector out;
  out.set(v, exponent);
  return out;
}

std::int64_t ExpVector::operator[](const Vertex& v) const {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), v,
      [](const Entry& e, const Vertex& key) { return e.first < key; });
  return (it != entries_.end() && it->first == v) ? it->second : 0;
}

void ExpVector::set(const Vertex& v, std::int64_t exponent) {
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), v,
      [](const Entry& e, const Vertex& key) { return e.first < key; });
  if (it != entries_.end() && it->first == v) {
    if (exponent == 0)
      entries_.erase(it);
    else
      it->second = exponent;
  } else if (exponent != 0) {
    entries_.insert(it, {v, exponent});
  }
}

void ExpVector::add(const Vertex& v, std::int64_t delta) {
  set(v, checked_add((*this)[v], delta));
}

template <typename Op>
ExpVector ExpVector::merge(const ExpVector& lhs, const ExpVector& rhs, Op op) {
  const auto& a = lhs.entries_;
  const auto& b = rhs.entries_;
  ExpVector result;
  auto& out = result.entries_;
  out.reserve(a.size() + b.size());
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      out.emplace_back(ia->first, op(ia->second, 0));
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, op(0, ib->second));
      ++ib;
    } else {
      std::int64_t v = op(ia->second, ib->second);
      if (v != 0) out.emplace_back(ia->first, v);
      ++ia;
      ++ib;
    }
  }
  return result;
}

ExpVector ExpVector::operator+(const ExpVector& other) const {
  return merge(*this, other,
               [](std::int64_t x, std::int64_t y) { return checked_add(x, y); });
}

ExpVector ExpVector::operator-(const ExpVector& other) const {
  return merge(*this, other, [](std::int64_t x, std::int64_t y) {
    return checked_add(x, -y);
  });
}

ExpVector ExpVector::operator-() const { return scaled(-1); }

ExpVector ExpVector::scaled(std::int64_t factor) const {
  ExpVector out;
  if (factor == 0) return out;
  out.entries_.reserve(entries_.size());
  for (const auto& [v, e] : entries_)
    out.entries_.emplace_back(v, checked_mul(e, factor));
  return out;
}

std::strong_ordering monomial_compare(const ExpVector& a, const ExpVector& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      return ia->second <=> 0;
    }
    if (ia == a.end() || ib->first < ia->first) {
      return 0 <=> ib->second;
    }
    if (ia->second != ib->second) return ia->second <=> ib->second;
    ++ia;
    ++ib;
  }
  return std::strong_ordering::equal;
}

}  // namespace qtcluster
