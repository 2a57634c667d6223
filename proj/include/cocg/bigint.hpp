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

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace cocg {

using BigInt = mpz_class;
using BigRational = mpq_class;

BigInt pow2(unsigned exponent);

// Floor of the square root; requires value >= 0.
BigInt isqrt(const BigInt& value);

bool is_perfect_square(const BigInt& value);

std::string to_string(const BigInt& value);

// Throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const BigInt& value);

}  // namespace cocg
