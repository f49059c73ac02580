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

#include "qtcluster/cartan.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <shared_mutex>

#include "qtcluster/errors.hpp"

namespace qtcluster {

std::string to_string(DynkinType type) {
  switch (type) {
    case DynkinType::A:
      return "A";
    case DynkinType::D:
      return "D";
    case DynkinType::E:
      return "E";
  }
  return "?";
}

DynkinType parse_dynkin_type(std::string_view label) {
  if (label == "A" || label == "a") return DynkinType::A;
  if (label == "D" || label == "d") return DynkinType::D;
  if (label == "E" || label == "e") return DynkinType::E;
  throw DomainError("unknown Dynkin type '" + std::string(label) +
                    "' (expected A, D or E)");
}

// Per-row tables: row i holds, for every degree m, the values C~ij(m) and
// F_ij(m) for all j. A row is extended in one go because the recurrence for
// column j reads the neighbouring columns at the previous degree.
struct CartanData::SeriesCache {
  struct Row {
    std::vector<std::vector<std::int64_t>> ctilde;  // [m][j]
    std::vector<std::vector<std::int64_t>> f;       // [m][j]
  };
  mutable std::shared_mutex mutex;
  std::vector<Row> rows;
};

namespace {

void add_edge(std::vector<std::vector<int>>& nb, int a, int b) {
  nb[a].push_back(b);
  nb[b].push_back(a);
}

}  // namespace

CartanData build_cartan(DynkinType type, int rank) {
  switch (type) {
    case DynkinType::A:
      if (rank < 1) throw DomainError("type A needs rank >= 1");
      break;
    case DynkinType::D:
      if (rank < 4) throw DomainError("type D needs rank >= 4");
      break;
    case DynkinType::E:
      if (rank < 6 || rank > 8)
        throw DomainError("type E needs rank 6, 7 or 8");
      break;
  }

  CartanData c;
  c.type_ = type;
  c.rank_ = rank;
  c.neighbours_.assign(rank + 1, {});
  auto& nb = c.neighbours_;
  switch (type) {
    case DynkinType::A:
      for (int i = 1; i < rank; ++i) add_edge(nb, i, i + 1);
      break;
    case DynkinType::D:
      for (int i = 1; i < rank - 2; ++i) add_edge(nb, i, i + 1);
      add_edge(nb, rank - 2, rank - 1);
      add_edge(nb, rank - 2, rank);
      break;
    case DynkinType::E:
      add_edge(nb, 1, 3);
      for (int i = 3; i < rank; ++i) add_edge(nb, i, i + 1);
      add_edge(nb, 2, 4);
      break;
  }
  for (auto& list : nb) std::sort(list.begin(), list.end());

  c.cartan_ = IntMatrix(rank, rank);
  for (int i = 1; i <= rank; ++i) {
    c.cartan_(i - 1, i - 1) = 2;
    for (int j : nb[i]) c.cartan_(i - 1, j - 1) = -1;
  }

  // Breadth-first distances from node 1.
  c.parity_.assign(rank + 1, -1);
  std::deque<int> queue{1};
  c.parity_[1] = 0;
  while (!queue.empty()) {
    int u = queue.front();
    queue.pop_front();
    for (int w : nb[u]) {
      if (c.parity_[w] < 0) {
        c.parity_[w] = 1 - c.parity_[u];
        queue.push_back(w);
      }
    }
  }

  c.cache_ = std::make_shared<CartanData::SeriesCache>();
  c.cache_->rows.resize(rank + 1);
  return c;
}

std::string CartanData::label() const {
  return to_string(type_) + std::to_string(rank_);
}

void CartanData::check_node(int i) const {
  if (i < 1 || i > rank_) {
    throw DomainError("node " + std::to_string(i) + " outside 1.." +
                      std::to_string(rank_) + " for " + label());
  }
}

int CartanData::entry(int i, int j) const {
  check_node(i);
  check_node(j);
  return static_cast<int>(cartan_(i - 1, j - 1));
}

bool CartanData::adjacent(int i, int j) const {
  return entry(i, j) == -1;
}

const std::vector<int>& CartanData::neighbours(int i) const {
  check_node(i);
  return neighbours_[i];
}

std::vector<std::pair<int, int>> CartanData::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= rank_; ++i)
    for (int j : neighbours_[i])
      if (i < j) out.emplace_back(i, j);
  return out;
}

int CartanData::dual_coxeter() const {
  switch (type_) {
    case DynkinType::A:
      return rank_ + 1;
    case DynkinType::D:
      return 2 * rank_ - 2;
    case DynkinType::E:
      return rank_ == 6 ? 12 : rank_ == 7 ? 18 : 30;
  }
  return 0;
}

int CartanData::parity(int i) const {
  check_node(i);
  return parity_[i];
}

bool CartanData::contains(int node, int level) const {
  if (node < 1 || node > rank_) return false;
  return ((level - parity_[node]) % 2) == 0;
}

std::int64_t CartanData::ctilde(int i, int j, int m) const {
  check_node(i);
  check_node(j);
  if (m < 0) throw DomainError("ctilde degree must be non-negative");
  auto& cache = *cache_;
  {
    std::shared_lock lock(cache.mutex);
    const auto& row = cache.rows[i];
    if (static_cast<std::size_t>(m) < row.ctilde.size()) return row.ctilde[m][j];
  }
  std::unique_lock lock(cache.mutex);
  auto& row = cache.rows[i];
  if (row.ctilde.empty()) {
    row.ctilde.assign(2, std::vector<std::int64_t>(rank_ + 1, 0));
    row.ctilde[1][i] = 1;
    row.f.assign(2, std::vector<std::int64_t>(rank_ + 1, 0));
  }
  while (row.ctilde.size() <= static_cast<std::size_t>(m)) {
    const std::size_t next = row.ctilde.size();
    const auto& prev = row.ctilde[next - 1];
    const auto& prev2 = row.ctilde[next - 2];
    std::vector<std::int64_t> values(rank_ + 1, 0);
    for (int col = 1; col <= rank_; ++col) {
      std::int64_t acc = -prev2[col];
      for (int k : neighbours_[col]) acc = checked_add(acc, prev[k]);
      values[col] = acc;
    }
    row.ctilde.push_back(std::move(values));
    // F(m) = F(m-2) - C~(m-1)
    std::vector<std::int64_t> fvals(rank_ + 1, 0);
    for (int col = 1; col <= rank_; ++col)
      fvals[col] = checked_add(row.f[next - 2][col], -row.ctilde[next - 1][col]);
    row.f.push_back(std::move(fvals));
  }
  return row.ctilde[m][j];
}

std::int64_t CartanData::n_form(int i, int j, int m) const {
  if (m == 0) {
    check_node(i);
    check_node(j);
    return 0;
  }
  if (m < 0) return -n_form(i, j, -m);
  return ctilde(i, j, m + 1) - ctilde(i, j, m - 1);
}

std::int64_t CartanData::f_form(int i, int j, int m) const {
  if (m < 0) return -f_form(i, j, -m);
  ctilde(i, j, m);  // ensures both tables reach degree m
  std::shared_lock lock(cache_->mutex);
  return cache_->rows[i].f[m][j];
}

}  // namespace qtcluster
