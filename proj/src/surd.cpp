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

#include "cocg/surd.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace cocg {

SurdValue::SurdValue(BigInt p, BigInt d, BigInt q) : p_(std::move(p)), d_(std::move(d)), q_(std::move(q)) {
  if (sgn(d_) < 0) throw std::invalid_argument("surd radicand must be nonnegative");
  if (sgn(q_) == 0) throw std::invalid_argument("surd denominator must be nonzero");
  if (sgn(q_) < 0) {
    q_ = -q_;
    p_ = -p_;  // (p ± √d)/(-q) = (-p ∓ √d)/q, same pair
  }

  // Largest g with g | p, g | q and g² | d, built prime by prime from gcd(p, q).
  BigInt rest = gcd(p_, q_);
  BigInt g = 1;
  for (BigInt f = 2; f * f <= rest; ++f) {
    while (rest % f == 0) {
      rest /= f;
      const BigInt trial = g * f;
      if (p_ % trial == 0 && q_ % trial == 0 && d_ % (trial * trial) == 0) g = trial;
    }
  }
  if (rest > 1) {
    const BigInt trial = g * rest;
    if (p_ % trial == 0 && q_ % trial == 0 && d_ % (trial * trial) == 0) g = trial;
  }
  p_ /= g;
  q_ /= g;
  d_ /= g * g;
  rational_ = is_perfect_square(d_);
}

double SurdValue::plus_value() const {
  return (p_.get_d() + std::sqrt(d_.get_d())) / q_.get_d();
}

double SurdValue::minus_value() const {
  return (p_.get_d() - std::sqrt(d_.get_d())) / q_.get_d();
}

std::string SurdValue::to_string() const {
  std::ostringstream out;
  const std::string radical = rational_ ? isqrt(d_).get_str() : "√" + d_.get_str();
  if (p_ == 0) {
    out << "±" << radical;
    if (q_ != 1) out << '/' << q_.get_str();
    return out.str();
  }
  if (q_ != 1) out << '(';
  out << p_.get_str() << " ± " << radical;
  if (q_ != 1) out << ")/" << q_.get_str();
  return out.str();
}

}  // namespace cocg
