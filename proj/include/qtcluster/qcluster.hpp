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
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "qtcluster/compat.hpp"
#include "qtcluster/laurent.hpp"
#include "qtcluster/qtorus.hpp"
#include "qtcluster/quiver.hpp"

namespace qtcluster {

/// Quantum seed whose cluster variables are expressed in the quantum torus
/// of the initial seed. Values are persistent: mutation returns a new seed
/// that shares every unchanged variable with its parent.
class QuantumSeed {
 public:
  const QuiverSlice& slice() const { return *slice_; }
  const QuantumTorus& torus() const { return *torus_; }
  const ExchangeMatrix& b() const { return b_; }
  const IntMatrix& lambda() const { return lambda_; }
  const std::vector<Vertex>& history() const { return history_; }

  std::size_t size() const { return vars_.size(); }
  /// Variable attached to row `row` of the slice.
  const TorusElement& var_at(std::size_t row) const { return *vars_[row]; }
  const TorusElement& var(const Vertex& v) const;

 private:
  friend QuantumSeed initial_seed(const QuiverSlice& slice);
  friend QuantumSeed mutate(const QuantumSeed& seed, const Vertex& k);

  std::shared_ptr<const QuiverSlice> slice_;
  std::shared_ptr<const QuantumTorus> torus_;
  std::vector<std::shared_ptr<const TorusElement>> vars_;
  ExchangeMatrix b_;
  IntMatrix lambda_;
  std::vector<Vertex> history_;
};

/// Seed with vars (i, r) -> z_{i,r} and Lambda built from F. Throws
/// InvariantError when the pair is not compatible.
QuantumSeed initial_seed(const QuiverSlice& slice);

/// Two-term quantum exchange at k followed by exact division. The new
/// variable is checked for bar-invariance, positivity and t-parity; a
/// failure raises InvariantError.
QuantumSeed mutate(const QuantumSeed& seed, const Vertex& k);

/// Memo of seeds keyed by slice and mutation path. Thread-safe.
class SeedCache {
 public:
  std::shared_ptr<const QuantumSeed> find(const std::string& key) const;
  void insert(const std::string& key, const QuantumSeed& seed);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<const QuantumSeed>> seeds_;
};

std::string cache_key(const QuiverSlice& slice, const std::vector<Vertex>& path);

QuantumSeed mutate_along(const QuantumSeed& seed, const std::vector<Vertex>& path,
                         SeedCache* cache = nullptr);

struct VariableCheck {
  bool bar_invariant = false;
  bool positive = false;
  bool single_parity = false;

  bool ok() const { return bar_invariant && positive && single_parity; }
};

/// Properties every quantum cluster variable must have.
VariableCheck check_variable(const TorusElement& x);

struct CommutationFailure {
  Vertex u;
  Vertex w;
  std::int64_t expected = 0;
};

/// Pairs (u, w) with vars[u] * vars[w] != t^{Lambda(u,w)} vars[w] * vars[u].
std::vector<CommutationFailure> check_commutation(const QuantumSeed& seed);

using ClassicalCluster = std::map<Vertex, LaurentPolynomial>;

/// Classical exchange relations x_k x_k' = prod x_i^[b_ik]+ + prod x_i^[-b_ik]+
/// starting from x_{i,r} = z_{i,r}. Shares no code with the quantum engine
/// beyond the matrix mutation.
ClassicalCluster classical_mutate_along(const QuiverSlice& slice,
                                        const std::vector<Vertex>& path);

/// Exact quotient of commutative Laurent polynomials; throws InvariantError.
LaurentPolynomial classical_divide(const LaurentPolynomial& a,
                                   const LaurentPolynomial& d);

/// Parses "(1,4);(1,2)" (separators ';' or whitespace).
std::vector<Vertex> parse_path(const std::string& text);
std::string to_string(const std::vector<Vertex>& path);

}  // namespace qtcluster
