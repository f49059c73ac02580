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
#include <optional>
#include <string>
#include <vector>

namespace qtcluster {

/// Laurent polynomial in v = t^{1/2} with integer coefficients.
///
/// Stored densely from the lowest non-zero power. The zero polynomial has no
/// coefficients; otherwise the first and last coefficients are non-zero.
class TCoeff {
 public:
  TCoeff() = default;
  /// c * v^power
  static TCoeff monomial(std::int64_t c, int power = 0);
  static TCoeff one() { return monomial(1, 0); }
  /// Coefficients from v^low upwards.
  static TCoeff from_coeffs(int low, std::vector<std::int64_t> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  /// True when exactly one power of v carries a non-zero coefficient.
  bool is_monomial() const { return coeffs_.size() == 1; }

  int low() const { return low_; }
  int high() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  std::int64_t coeff(int power) const;
  const std::vector<std::int64_t>& coeffs() const { return coeffs_; }
  std::size_t term_count() const;

  TCoeff operator+(const TCoeff& o) const;
  TCoeff operator-(const TCoeff& o) const;
  TCoeff operator-() const;
  TCoeff operator*(const TCoeff& o) const;
  TCoeff& operator+=(const TCoeff& o) { return *this = *this + o; }
  TCoeff& operator-=(const TCoeff& o) { return *this = *this - o; }

  /// Multiplication by v^k.
  TCoeff shifted(int k) const;
  /// v -> v^{-1}
  TCoeff bar() const;
  /// Exact quotient in Z[v, v^-1]; nullopt when the division leaves a
  /// remainder. Divisor must be non-zero.
  std::optional<TCoeff> divide_exact(const TCoeff& divisor) const;

  /// Value at v = 1.
  std::int64_t at_one() const;
  /// Every coefficient >= 0.
  bool non_negative() const;
  /// All non-zero coefficients sit on powers of the same parity.
  bool single_parity() const;

  friend bool operator==(const TCoeff&, const TCoeff&) = default;

 private:
  void normalize();

  int low_ = 0;
  std::vector<std::int64_t> coeffs_;
};

/// "t^{k/2}" style rendering, e.g. "t^{-1/2} + 2 t^{1/2}".
std::string to_string(const TCoeff& c);

}  // namespace qtcluster
