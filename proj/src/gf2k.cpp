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

#include "cocg/gf2k.hpp"

#include <bit>
#include <string>

#include "cocg/errors.hpp"

namespace cocg {

namespace gf2 {

int degree(std::uint64_t poly) noexcept {
  return poly == 0 ? -1 : 63 - std::countl_zero(poly);
}

std::uint64_t mod(std::uint64_t a, std::uint64_t modulus) noexcept {
  const int dm = degree(modulus);
  for (int da = degree(a); da >= dm; da = degree(a)) a ^= modulus << (da - dm);
  return a;
}

std::uint32_t mul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t modulus) noexcept {
  std::uint64_t product = 0;
  for (std::uint64_t shifted = a; b != 0; b >>= 1, shifted <<= 1) {
    if (b & 1u) product ^= shifted;
  }
  return static_cast<std::uint32_t>(mod(product, modulus));
}

bool is_irreducible(std::uint32_t poly) noexcept {
  const int d = degree(poly);
  if (d < 1) return false;
  for (std::uint32_t divisor = 2; degree(divisor) <= d / 2; ++divisor) {
    if (mod(poly, divisor) == 0) return false;
  }
  return true;
}

}  // namespace gf2

namespace {

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    primes.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

std::uint32_t slow_pow(std::uint32_t a, std::uint64_t e, std::uint32_t modulus) {
  std::uint32_t result = 1;
  for (; e != 0; e >>= 1) {
    if (e & 1u) result = gf2::mul_mod(result, a, modulus);
    a = gf2::mul_mod(a, a, modulus);
  }
  return result;
}

}  // namespace

FieldGF2k::FieldGF2k(int k) : degree_(k), modulus_(0) {
  if (k < 1 || k > kMaxDegree) {
    throw InvalidParameter("GF(2^k) requires 1 <= k <= 16, got k=" + std::to_string(k));
  }
  const std::uint32_t lead = 1u << k;
  for (std::uint32_t low = 1; low < lead; low += 2) {
    if (gf2::is_irreducible(lead | low)) {
      modulus_ = lead | low;
      break;
    }
  }

  const std::uint64_t group_order = size() - 1;
  const auto primes = prime_factors(group_order);
  for (Element g = 1; g < size(); ++g) {
    bool primitive = true;
    for (const auto p : primes) {
      if (slow_pow(g, group_order / p, modulus_) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = g;
      break;
    }
  }

  log_.assign(size(), 0);
  exp_.assign(2 * group_order, 0);
  Element power = 1;
  for (std::uint64_t i = 0; i < group_order; ++i) {
    exp_[i] = power;
    exp_[i + group_order] = power;
    log_[power] = static_cast<std::uint32_t>(i);
    power = gf2::mul_mod(power, generator_, modulus_);
  }
}

FieldGF2k::Element FieldGF2k::mul(Element a, Element b) const noexcept {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

FieldGF2k::Element FieldGF2k::inv(Element a) const {
  if (a == 0) throw DivisionByZero("inverse of zero in GF(2^" + std::to_string(degree_) + ")");
  const std::uint32_t group_order = size() - 1;
  return exp_[(group_order - log_[a]) % group_order];
}

FieldGF2k::Element FieldGF2k::pow(Element a, std::uint64_t e) const noexcept {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t group_order = size() - 1;
  return exp_[(log_[a] * (e % group_order)) % group_order];
}

FieldGF2k gf_build(int k) { return FieldGF2k(k); }

FieldGF2k::Element gf_mul(const FieldGF2k& field, FieldGF2k::Element a, FieldGF2k::Element b) {
  return field.mul(a, b);
}

FieldGF2k::Element gf_inv(const FieldGF2k& field, FieldGF2k::Element a) { return field.inv(a); }

}  // namespace cocg
