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

#include "qtcluster/compat.hpp"

#include "qtcluster/errors.hpp"

namespace qtcluster {

IntMatrix build_lambda(const QuiverSlice& slice) {
  const auto& vs = slice.vertices();
  const CartanData& c = slice.cartan();
  IntMatrix lambda(vs.size(), vs.size());
  for (std::size_t a = 0; a < vs.size(); ++a) {
    for (std::size_t b = a + 1; b < vs.size(); ++b) {
      std::int64_t f = c.f_form(vs[a].node, vs[b].node, vs[b].level - vs[a].level);
      lambda(a, b) = f;
      lambda(b, a) = -f;
    }
  }
  return lambda;
}

bool CompatReport::constant_diagonal() const {
  for (std::int64_t d : diagonal) {
    if (d != diagonal.front()) return false;
  }
  return !diagonal.empty();
}

CompatReport check_compatible(const ExchangeMatrix& b, const IntMatrix& lambda) {
  if (lambda.rows() != b.rows() || lambda.cols() != b.rows()) {
    throw DomainError("Lambda must be square of size " + std::to_string(b.rows()));
  }
  CompatReport report;
  for (std::size_t r = 0; r < lambda.rows(); ++r) {
    for (std::size_t c = r; c < lambda.cols(); ++c) {
      if (lambda(r, c) != -lambda(c, r)) {
        report.violations.push_back(
            {r, c, lambda(r, c), "Lambda is not skew-symmetric at this entry"});
      }
    }
  }

  report.product = b.b.transpose() * lambda;
  for (std::size_t k = 0; k < b.cols(); ++k) {
    for (std::size_t j = 0; j < lambda.cols(); ++j) {
      std::int64_t v = report.product(k, j);
      if (j == b.col_rows[k]) {
        report.diagonal.push_back(v);
        if (v == 0) report.violations.push_back({k, j, v, "zero diagonal entry"});
      } else if (v != 0) {
        report.violations.push_back({k, j, v, "non-zero off-diagonal entry"});
      }
    }
  }

  bool all_pos = !report.diagonal.empty(), all_neg = all_pos;
  for (std::int64_t d : report.diagonal) {
    all_pos = all_pos && d > 0;
    all_neg = all_neg && d < 0;
  }
  report.sign = all_pos ? 1 : (all_neg ? -1 : 0);
  return report;
}

IntMatrix mutate_lambda(const IntMatrix& lambda, const ExchangeMatrix& b,
                        std::size_t k) {
  if (lambda.rows() != b.rows() || lambda.cols() != b.rows()) {
    throw DomainError("Lambda and B have inconsistent shapes");
  }
  IntMatrix e = e_matrix(b, k);
  return e.transpose() * lambda * e;
}

}  // namespace qtcluster
