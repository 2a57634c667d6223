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

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "cocg/bigint.hpp"
#include "cocg/poly.hpp"
#include "cocg/surd.hpp"

namespace cocg {

/// Roots of a monic integer polynomial, kept as the polynomial itself.
struct PolyRoots {
  BigPoly poly;
  friend bool operator==(const PolyRoots&, const PolyRoots&) = default;
};

/// One eigenvalue expression: an integer, a conjugate surd pair (both members
/// counted), or all roots of a polynomial factor.
using EigenvalueExpr = std::variant<BigInt, SurdValue, PolyRoots>;

/// Number of roots one copy of the expression contributes (1, 2 or degree).
std::size_t root_count(const EigenvalueExpr& expr);

std::string to_string(const EigenvalueExpr& expr);

struct SpectrumEntry {
  EigenvalueExpr value;
  std::size_t multiplicity = 1;
};

/// A claimed or extracted spectrum as a multiset of exact expressions.
struct SpectrumSpec {
  std::vector<SpectrumEntry> entries;
  std::string source;

  std::size_t root_count() const;
  /// Sum of all roots with multiplicity (exact).
  BigRational root_sum() const;
  /// True when every entry is an integer or a pair of integers. PolyRoots
  /// entries count as non-integral.
  bool is_integral() const;
  /// "-2×2, 2 ± √7" (multiplicity shown when > 1).
  std::string to_string() const;
};

}  // namespace cocg
