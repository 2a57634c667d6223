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

#include "cocg/bigint.hpp"

#include <stdexcept>

namespace cocg {

BigInt pow2(unsigned exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 2, exponent);
  return result;
}

BigInt isqrt(const BigInt& value) {
  if (sgn(value) < 0) throw std::domain_error("isqrt of a negative integer");
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
  return root;
}

bool is_perfect_square(const BigInt& value) {
  if (sgn(value) < 0) return false;
  const BigInt root = isqrt(value);
  return root * root == value;
}

std::string to_string(const BigInt& value) { return value.get_str(); }

std::int64_t to_int64(const BigInt& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits: " + value.get_str());
  return value.get_si();
}

}  // namespace cocg
