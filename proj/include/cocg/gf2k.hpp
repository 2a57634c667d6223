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

#include <cstdint>
#include <vector>

namespace cocg {

/// The finite field GF(2^k) in polynomial basis.
///
/// Elements are bit patterns of polynomials of degree < k over GF(2); bit i
/// holds the coefficient of x^i. The modulus is the numerically smallest
/// irreducible monic polynomial of degree k with nonzero constant term, found
/// by scanning. Multiplication goes through log/exp tables built from the
/// smallest primitive element.
class FieldGF2k {
 public:
  using Element = std::uint32_t;

  static constexpr int kMaxDegree = 16;

  /// Throws InvalidParameter unless 1 <= k <= 16.
  explicit FieldGF2k(int k);

  int degree() const noexcept { return degree_; }
  /// Bit pattern of the modulus including the leading x^k term.
  std::uint32_t modulus() const noexcept { return modulus_; }
  std::uint32_t size() const noexcept { return 1u << degree_; }
  bool contains(Element a) const noexcept { return a < size(); }

  Element add(Element a, Element b) const noexcept { return a ^ b; }
  Element mul(Element a, Element b) const noexcept;
  /// Throws DivisionByZero for a == 0.
  Element inv(Element a) const;
  Element pow(Element a, std::uint64_t e) const noexcept;

  Element generator() const noexcept { return generator_; }

 private:
  int degree_;
  std::uint32_t modulus_;
  Element generator_ = 1;
  std::vector<std::uint32_t> log_;
  std::vector<Element> exp_;
};

FieldGF2k gf_build(int k);
FieldGF2k::Element gf_mul(const FieldGF2k& field, FieldGF2k::Element a, FieldGF2k::Element b);
FieldGF2k::Element gf_inv(const FieldGF2k& field, FieldGF2k::Element a);

namespace gf2 {

/// Degree of a GF(2)[x] polynomial given as a bit pattern; -1 for zero.
int degree(std::uint64_t poly) noexcept;

/// Carry-less product followed by reduction modulo `modulus`.
std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus) noexcept;

std::uint64_t mod(std::uint64_t a, std::uint64_t modulus) noexcept;

/// Exhaustive trial division by every polynomial of degree 1..deg/2.
bool is_irreducible(std::uint32_t poly) noexcept;

}  // namespace gf2

}  // namespace cocg
