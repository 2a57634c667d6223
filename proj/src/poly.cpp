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

#include "cocg/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace cocg {

BigPoly::BigPoly(std::vector<BigInt> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

BigPoly::BigPoly(std::initializer_list<long> coefficients) {
  for (const long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

BigPoly BigPoly::linear(const BigInt& root) { return BigPoly(std::vector<BigInt>{-root, BigInt(1)}); }

BigPoly BigPoly::constant(const BigInt& value) { return BigPoly(std::vector<BigInt>{value}); }

void BigPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt BigPoly::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

const BigInt& BigPoly::leading() const {
  if (coeffs_.empty()) throw std::logic_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

BigInt BigPoly::evaluate(const BigInt& x) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigPoly& BigPoly::operator+=(const BigPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

BigPoly& BigPoly::operator-=(const BigPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

BigPoly& BigPoly::operator*=(const BigPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> product(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) product[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(product);
  trim();
  return *this;
}

BigPoly BigPoly::pow(unsigned exponent) const {
  BigPoly result = constant(1);
  BigPoly base = *this;
  for (; exponent != 0; exponent >>= 1) {
    if (exponent & 1u) result *= base;
    if (exponent > 1) base *= base;
  }
  return result;
}

std::pair<BigPoly, BigPoly> BigPoly::divmod_monic(const BigPoly& divisor) const {
  if (!divisor.is_monic()) throw std::invalid_argument("divisor must be monic");
  const int dd = divisor.degree();
  if (degree() < dd) return {BigPoly(), *this};
  std::vector<BigInt> rem = coeffs_;
  std::vector<BigInt> quot(static_cast<std::size_t>(degree() - dd + 1));
  for (int i = degree(); i >= dd; --i) {
    const BigInt c = rem[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    quot[static_cast<std::size_t>(i - dd)] = c;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= c * divisor.coeffs_[static_cast<std::size_t>(j)];
  }
  return {BigPoly(std::move(quot)), BigPoly(std::move(rem))};
}

std::string BigPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const BigInt& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const BigInt magnitude = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << magnitude.get_str();
      continue;
    }
    if (magnitude != 1) out << magnitude.get_str() << "·";
    out << "λ";
    if (i > 1) out << '^' << i;
  }
  return out.str();
}

}  // namespace cocg
