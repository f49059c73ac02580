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

#include "qtcluster/tcoeff.hpp"

#include <cstdlib>

#include "qtcluster/errors.hpp"
#include "qtcluster/int_matrix.hpp"

namespace qtcluster {

TCoeff TCoeff::monomial(std::int64_t c, int power) {
  TCoeff out;
  if (c != 0) {
    out.low_ = power;
    out.coeffs_.push_back(c);
  }
  return out;
}

TCoeff TCoeff::from_coeffs(int low, std::vector<std::int64_t> coeffs) {
  TCoeff out;
  out.low_ = low;
  out.coeffs_ = std::move(coeffs);
  out.normalize();
  return out;
}

void TCoeff::normalize() {
  std::size_t first = 0;
  while (first < coeffs_.size() && coeffs_[first] == 0) ++first;
  if (first == coeffs_.size()) {
    coeffs_.clear();
    low_ = 0;
    return;
  }
  std::size_t last = coeffs_.size();
  while (coeffs_[last - 1] == 0) --last;
  if (first > 0 || last < coeffs_.size()) {
    coeffs_ = std::vector<std::int64_t>(coeffs_.begin() + first,
                                        coeffs_.begin() + last);
    low_ += static_cast<int>(first);
  }
}

bool TCoeff::is_one() const {
  return coeffs_.size() == 1 && low_ == 0 && coeffs_[0] == 1;
}

std::int64_t TCoeff::coeff(int power) const {
  if (is_zero() || power < low_ || power > high()) return 0;
  return coeffs_[power - low_];
}

std::size_t TCoeff::term_count() const {
  std::size_t n = 0;
  for (auto c : coeffs_) n += (c != 0);
  return n;
}

TCoeff TCoeff::operator+(const TCoeff& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high(), o.high());
  std::vector<std::int64_t> out(hi - lo + 1, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) out[low_ - lo + k] = coeffs_[k];
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) {
    auto& slot = out[o.low_ - lo + k];
    slot = checked_add(slot, o.coeffs_[k]);
  }
  return from_coeffs(lo, std::move(out));
}

TCoeff TCoeff::operator-() const {
  TCoeff out = *this;
  for (auto& c : out.coeffs_) c = checked_mul(c, -1);
  return out;
}

TCoeff TCoeff::operator-(const TCoeff& o) const { return *this + (-o); }

TCoeff TCoeff::operator*(const TCoeff& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<std::int64_t> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0) continue;
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b)
      out[a + b] = checked_add(out[a + b], checked_mul(coeffs_[a], o.coeffs_[b]));
  }
  return from_coeffs(low_ + o.low_, std::move(out));
}

TCoeff TCoeff::shifted(int k) const {
  TCoeff out = *this;
  if (!out.is_zero()) out.low_ += k;
  return out;
}

TCoeff TCoeff::bar() const {
  if (is_zero()) return {};
  return from_coeffs(-high(),
                     std::vector<std::int64_t>(coeffs_.rbegin(), coeffs_.rend()));
}

std::optional<TCoeff> TCoeff::divide_exact(const TCoeff& divisor) const {
  if (divisor.is_zero()) throw DomainError("division by the zero polynomial");
  if (is_zero()) return TCoeff{};
  if (coeffs_.size() < divisor.coeffs_.size()) return std::nullopt;
  // Long division from the top degree down, on the shifted polynomials.
  std::vector<std::int64_t> rem = coeffs_;
  const std::size_t dn = divisor.coeffs_.size();
  const std::int64_t lead = divisor.coeffs_.back();
  std::vector<std::int64_t> quot(rem.size() - dn + 1, 0);
  for (std::size_t q = quot.size(); q-- > 0;) {
    const std::int64_t top = rem[q + dn - 1];
    if (top == 0) continue;
    if (top % lead != 0) return std::nullopt;
    const std::int64_t factor = top / lead;
    quot[q] = factor;
    for (std::size_t k = 0; k < dn; ++k)
      rem[q + k] = checked_add(rem[q + k], -checked_mul(factor, divisor.coeffs_[k]));
  }
  for (auto r : rem)
    if (r != 0) return std::nullopt;
  return from_coeffs(low_ - divisor.low_, std::move(quot));
}

std::int64_t TCoeff::at_one() const {
  std::int64_t s = 0;
  for (auto c : coeffs_) s = checked_add(s, c);
  return s;
}

bool TCoeff::non_negative() const {
  for (auto c : coeffs_)
    if (c < 0) return false;
  return true;
}

bool TCoeff::single_parity() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0 && (k % 2) != 0) return false;
  return true;
}

namespace {

std::string power_string(int k) { return "t^{" + std::to_string(k) + "/2}"; }

}  // namespace

std::string to_string(const TCoeff& c) {
  if (c.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int p = c.low(); p <= c.high(); ++p) {
    std::int64_t k = c.coeff(p);
    if (k == 0) continue;
    if (!first) out += k < 0 ? " - " : " + ";
    else if (k < 0) out += "-";
    first = false;
    const std::int64_t mag = std::llabs(k);
    if (p == 0) {
      out += std::to_string(mag);
    } else {
      if (mag != 1) out += std::to_string(mag) + " ";
      out += power_string(p);
    }
  }
  return out;
}

}  // namespace qtcluster
