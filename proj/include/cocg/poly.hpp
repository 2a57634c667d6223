// Copyright 2026 The cocg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "cocg/bigint.hpp"

namespace cocg {

/// Polynomial in λ with arbitrary-precision integer coefficients, constant
/// term first. Trailing zero coefficients are trimmed, so the zero
/// polynomial has no coefficients and degree -1.
class BigPoly {
 public:
  BigPoly() = default;
  explicit BigPoly(std::vector<BigInt> coefficients);
  BigPoly(std::initializer_list<long> coefficients);

  /// (λ - root)
  static BigPoly linear(const BigInt& root);
  static BigPoly constant(const BigInt& value);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<BigInt>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of λ^i; zero past the degree.
  BigInt coefficient(std::size_t i) const;
  const BigInt& leading() const;

  BigInt evaluate(const BigInt& x) const;

  BigPoly& operator+=(const BigPoly& rhs);
  BigPoly& operator-=(const BigPoly& rhs);
  BigPoly& operator*=(const BigPoly& rhs);
  friend BigPoly operator+(BigPoly lhs, const BigPoly& rhs) { return lhs += rhs; }
  friend BigPoly operator-(BigPoly lhs, const BigPoly& rhs) { return lhs -= rhs; }
  friend BigPoly operator*(BigPoly lhs, const BigPoly& rhs) { return lhs *= rhs; }
  friend bool operator==(const BigPoly&, const BigPoly&) = default;

  BigPoly pow(unsigned exponent) const;

  /// Quotient and remainder by a monic divisor (exact over the integers).
  std::pair<BigPoly, BigPoly> divmod_monic(const BigPoly& divisor) const;

  /// "λ^3 - 36·λ^2 + 264·λ - 520"; "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

}  // namespace cocg
