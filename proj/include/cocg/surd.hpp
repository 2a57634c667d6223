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

#include <string>

#include "cocg/bigint.hpp"

namespace cocg {

/// The conjugate pair (p ± √d)/q.
///
/// Construction normalizes: q > 0, and p, q and the square part of d are
/// divided by their largest common factor g (g | p, g | q, g² | d). Equal
/// pairs therefore compare equal field by field.
class SurdValue {
 public:
  /// Throws std::invalid_argument for d < 0 or q == 0.
  SurdValue(BigInt p, BigInt d, BigInt q);

  const BigInt& p() const noexcept { return p_; }
  const BigInt& d() const noexcept { return d_; }
  const BigInt& q() const noexcept { return q_; }

  /// True when d is a perfect square, i.e. both members are rational.
  bool is_rational() const noexcept { return rational_; }

  double plus_value() const;
  double minus_value() const;

  /// "2 ± √7", "(7 ± √17)/2"; rational pairs print as "±1" or "(3 ± 1)/2".
  std::string to_string() const;

  friend bool operator==(const SurdValue&, const SurdValue&) = default;

 private:
  BigInt p_;
  BigInt d_;
  BigInt q_;
  bool rational_ = false;
};

}  // namespace cocg
