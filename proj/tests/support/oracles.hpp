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

// Slow, obviously-correct reference computations for the unit and acceptance
// tests. None of this shares code with the library beyond the container types.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <vector>

#include "cocg/graph.hpp"
#include "cocg/poly.hpp"

namespace oracle {

using RatMatrix = std::vector<std::vector<mpq_class>>;

inline RatMatrix to_rational(const cocg::IntMatrix& m) {
  const std::size_t n = m.dimension();
  RatMatrix out(n, std::vector<mpq_class>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = mpq_class(static_cast<long>(m(i, j)));
  return out;
}

// Plain Gaussian elimination over Q with partial pivoting on nonzero.
inline mpq_class rational_det(RatMatrix a) {
  const std::size_t n = a.size();
  mpq_class det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    for (std::size_t r = col + 1; r < n; ++r) {
      if (a[r][col] == 0) continue;
      const mpq_class f = a[r][col] / a[col][col];
      for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  return det;
}

inline std::size_t rational_rank(RatMatrix a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      const mpq_class f = a[r][col] / a[rank][col];
      for (std::size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rational_nullity(const cocg::IntMatrix& m, long mu) {
  RatMatrix a = to_rational(m);
  for (std::size_t i = 0; i < a.size(); ++i) a[i][i] -= mu;
  return a.size() - rational_rank(a);
}

// Laplace expansion along the first row. Exponential; keep n small.
inline mpz_class cofactor_det(const std::vector<std::vector<long>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  if (n == 1) return a[0][0];
  mpz_class total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j] == 0) continue;
    std::vector<std::vector<long>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<long> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(a[r][c]);
      minor.push_back(row);
    }
    const mpz_class term = a[0][j] * cofactor_det(minor);
    total += (j % 2 == 0) ? term : mpz_class(-term);
  }
  return total;
}

inline mpz_class cofactor_det(const cocg::IntMatrix& m) {
  std::vector<std::vector<long>> a(m.dimension(), std::vector<long>(m.dimension()));
  for (std::size_t i = 0; i < m.dimension(); ++i)
    for (std::size_t j = 0; j < m.dimension(); ++j) a[i][j] = static_cast<long>(m(i, j));
  return cofactor_det(a);
}

// det(tI - M) sampled at t = 0..n, then Newton interpolation over Q.
inline cocg::BigPoly interpolated_charpoly(const cocg::IntMatrix& m) {
  const std::size_t n = m.dimension();
  const RatMatrix base = to_rational(m);
  std::vector<mpq_class> xs, ys;
  for (std::size_t t = 0; t <= n; ++t) {
    RatMatrix a = base;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = (i == j ? mpq_class(static_cast<long>(t)) : mpq_class(0)) - a[i][j];
    xs.emplace_back(static_cast<long>(t));
    ys.push_back(rational_det(a));
  }
  std::vector<mpq_class> div = ys;  // divided differences
  for (std::size_t level = 1; level <= n; ++level)
    for (std::size_t i = n; i >= level; --i) div[i] = (div[i] - div[i - 1]) / (xs[i] - xs[i - level]);
  std::vector<mpq_class> coeffs{div[n]};
  for (std::size_t i = n; i-- > 0;) {
    // coeffs = coeffs * (t - xs[i]) + div[i]
    std::vector<mpq_class> next(coeffs.size() + 1, 0);
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
      next[j + 1] += coeffs[j];
      next[j] -= coeffs[j] * xs[i];
    }
    next[0] += div[i];
    coeffs = next;
  }
  std::vector<mpz_class> out;
  for (auto& c : coeffs) {
    c.canonicalize();
    if (c.get_den() != 1) throw std::logic_error("non-integral interpolated coefficient");
    out.push_back(c.get_num());
  }
  return cocg::BigPoly(out);
}

// Schoolbook polynomial long division over Q, constant term first.
inline std::pair<std::vector<mpq_class>, std::vector<mpq_class>> long_divide(std::vector<mpq_class> num,
                                                                            const std::vector<mpq_class>& den) {
  std::vector<mpq_class> quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, 0);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const mpq_class f = num[i + den.size() - 1] / den.back();
    quot[i] = f;
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= f * den[j];
  }
  while (!num.empty() && num.back() == 0) num.pop_back();
  return {quot, num};
}

// GF(2)[x] with explicit coefficient vectors, low degree first.
using Gf2Poly = std::vector<int>;

inline Gf2Poly gf2_from_bits(std::uint64_t bits) {
  Gf2Poly p;
  for (; bits; bits >>= 1) p.push_back(static_cast<int>(bits & 1));
  return p;
}

inline std::uint64_t gf2_to_bits(const Gf2Poly& p) {
  std::uint64_t bits = 0;
  for (std::size_t i = p.size(); i-- > 0;) bits = (bits << 1) | static_cast<std::uint64_t>(p[i] & 1);
  return bits;
}

inline Gf2Poly gf2_mul(const Gf2Poly& a, const Gf2Poly& b) {
  if (a.empty() || b.empty()) return {};
  Gf2Poly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= a[i] & b[j];
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

inline Gf2Poly gf2_rem(Gf2Poly a, const Gf2Poly& m) {
  while (a.size() >= m.size()) {
    const std::size_t shift = a.size() - m.size();
    for (std::size_t j = 0; j < m.size(); ++j) a[shift + j] ^= m[j];
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

inline std::uint32_t gf_field_mul(std::uint32_t a, std::uint32_t b, std::uint32_t modulus) {
  return static_cast<std::uint32_t>(gf2_to_bits(gf2_rem(gf2_mul(gf2_from_bits(a), gf2_from_bits(b)), gf2_from_bits(modulus))));
}

// Irreducible iff no product of two factors of degree >= 1 equals it.
inline bool gf2_irreducible_bruteforce(std::uint32_t poly) {
  const Gf2Poly p = gf2_from_bits(poly);
  const int deg = static_cast<int>(p.size()) - 1;
  if (deg < 1) return false;
  for (std::uint32_t a = 2; a < (1u << deg); ++a)
    for (std::uint32_t b = 2; b < (1u << deg); ++b)
      if (gf2_mul(gf2_from_bits(a), gf2_from_bits(b)) == p) return false;
  return true;
}

inline cocg::IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  cocg::IntMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = dist(rng);
  return m;
}

}  // namespace oracle
