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
#include <string>
#include <vector>

#include "qtcluster/int_matrix.hpp"
#include "qtcluster/laurent.hpp"

namespace qtcluster {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double millis = 0;
  /// Wall-clock limit in milliseconds; 0 means untimed.
  double limit_ms = 0;
  std::string detail;
};

struct AcceptanceOptions {
  std::string golden_dir;
  /// Skip the slow sweeps (criteria 3 random part, 7 beyond A3, 10 sizes).
  bool quick = false;
  std::uint64_t seed = 20240611;
  /// Worker threads for independent character computations.
  unsigned threads = 1;
};

std::string default_golden_dir();

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);
CriterionResult run_criterion(int id, const AcceptanceOptions& options);
constexpr int kCriterionCount = 10;

/// Reads whitespace-separated integer rows; throws DomainError naming the
/// file when it is missing or ragged.
IntMatrix load_matrix(const std::string& path);

/// Parses Laurent polynomials written as "z_{1,2}z_{1,4}^{-1} + 2z_{1,0}".
LaurentPolynomial parse_z_polynomial(const std::string& text);

}  // namespace qtcluster
