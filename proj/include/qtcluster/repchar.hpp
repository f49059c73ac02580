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

#include <optional>
#include <string>
#include <vector>

#include "qtcluster/cartan.hpp"
#include "qtcluster/laurent.hpp"
#include "qtcluster/qcluster.hpp"
#include "qtcluster/qtorus.hpp"
#include "qtcluster/quiver.hpp"

namespace qtcluster {

struct MutationSequenceSpec {
  Vertex origin;
  int h_prime = 0;
  std::vector<int> column_order;
  std::vector<Vertex> sequence;

  /// (i, r + 2h'), where the character is read.
  Vertex read_vertex() const { return {origin.node, origin.level + 2 * h_prime}; }
};

/// h' = ceil(h^vee / 2); columns ordered i, same-parity nodes, other nodes;
/// S = S_{h'} ... S_2 (i, r + 2h').
MutationSequenceSpec mutation_sequence(const CartanData& cartan, int i, int r);

/// Smallest window holding the sequence with every mutated vertex
/// exchangeable: [r - 1, r + 2h' + 2].
Window default_window(const CartanData& cartan, int i, int r);

struct QtCharacter {
  Vertex origin;
  Vertex vertex_read;
  Window window;
  TorusElement value;
};

/// Quantum cluster variable at (i, r + 2h') after mutating the initial seed
/// of the slice along S. Rejects windows in which some vertex of S is not
/// exchangeable.
QtCharacter fundamental_qt_character(const CartanData& cartan, int i, int r,
                                     std::optional<Window> window = std::nullopt,
                                     SeedCache* cache = nullptr);

/// q-character of the fundamental module with highest monomial Y[i,r]
/// (= Y_{i,q^{r+1}}), by the Frenkel-Mukhin algorithm. Keys (j, s) stand
/// for Y_{j,q^{s+1}}.
LaurentPolynomial classical_fm_qchar(const CartanData& cartan, int i, int r,
                                     std::size_t monomial_budget = 100000);

struct PrefundamentalCharacter {
  TorusElement monomial;
  Weight psi_weight;
  WeightExpr chi;
};

/// [Psi_{i,q^r}] = z_{i,r} with formal weight [r/2 omega_i], and chi
/// truncated at `depth`. chi is only known for A1; other types are rejected.
PrefundamentalCharacter prefundamental_qt_character(const CartanData& cartan,
                                                    int i, int r, int depth);

struct RelationCheck {
  std::string name;
  bool pass = false;
  std::string lhs;
  std::string rhs;
};

enum class BaxterVariant { Standard, SwappedPowers };

struct BaxterReport {
  int r = 0;
  std::vector<RelationCheck> checks;
  bool pass() const;
};

/// chi~ * z_{1,2r} = t^{-1/2} z_{1,2r-2} + t^{1/2} z_{1,2r+2} in A1, its
/// formal weight bookkeeping and its t = 1 image against the classical
/// exchange relation.
BaxterReport baxter_check(int r, BaxterVariant variant = BaxterVariant::Standard);

struct DrinfeldReport {
  int q_sign = -1;
  std::vector<RelationCheck> checks;
  /// Casimir with both coefficients t^{1/2}; not part of pass().
  RelationCheck reference_casimir;
  bool pass() const;
};

/// E = chi~_{1,-2}, F = z_{1,0}, K = z_{1,-2}, K' = z_{1,2} with
/// q = q_sign * t^{1/2}.
DrinfeldReport drinfeld_double_check(int q_sign = -1);

struct ThinnessReport {
  QtCharacter character;
  bool pass = false;
  std::string detail;
};

/// Type A only: every coefficient of chi~_{i,r} equals 1.
ThinnessReport thinness_flatten_check(const CartanData& cartan, int i, int r);

}  // namespace qtcluster
