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
#include <cstdint>
#include <string>
#include <vector>

#include "qtcluster/int_matrix.hpp"
#include "qtcluster/quiver.hpp"

namespace qtcluster {

/// Lambda_{(i,r),(j,s)} = F_ij(s - r) over all vertices of the slice.
IntMatrix build_lambda(const QuiverSlice& slice);

struct CompatViolation {
  std::size_t row = 0;
  std::size_t col = 0;
  std::int64_t value = 0;
  std::string reason;
};

struct CompatReport {
  /// (B^T Lambda)(k, row of column k) for each exchangeable column k.
  std::vector<std::int64_t> diagonal;
  /// +1 or -1 when the diagonal is constant in sign and non-zero, else 0.
  int sign = 0;
  /// B^T Lambda, n x m.
  IntMatrix product;
  std::vector<CompatViolation> violations;

  bool compatible() const { return violations.empty() && sign != 0; }
  /// Diagonal equals the same constant everywhere.
  bool constant_diagonal() const;
};

/// Verifies that B^T Lambda is zero outside the entries (k, row of k) and
/// that those entries are non-zero with a common sign. Lambda must be
/// skew-symmetric; asymmetric entries are listed as violations.
CompatReport check_compatible(const ExchangeMatrix& b, const IntMatrix& lambda);

/// E_k^T Lambda E_k, with E_k read from b before the mutation.
IntMatrix mutate_lambda(const IntMatrix& lambda, const ExchangeMatrix& b,
                        std::size_t k);

}  // namespace qtcluster
