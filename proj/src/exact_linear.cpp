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

#include "cocg/exact_linear.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

#include "cocg/errors.hpp"

namespace cocg {

namespace {

// acc += x * a for a machine-word coefficient.
void addmul(BigInt& acc, const BigInt& x, std::int64_t a) {
  if (a >= 0) {
    mpz_addmul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(a));
  } else {
    mpz_submul_ui(acc.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(-(a + 1)) + 1ul);
  }
}

using BigMatrix = std::vector<std::vector<BigInt>>;

BigMatrix shifted(const IntMatrix& m, const BigInt& mu) {
  const std::size_t n = m.dimension();
  BigMatrix a(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = BigInt(static_cast<long>(m(i, j)));
    a[i][i] -= mu;
  }
  return a;
}

struct Elimination {
  std::size_t rank = 0;
  int sign = 1;
  BigInt last_pivot = 1;
};

// In-place Bareiss elimination with full pivoting. Stops when the trailing
// block is zero.
Elimination bareiss(BigMatrix& a) {
  const std::size_t n = a.size();
  Elimination out;
  BigInt prev = 1;
  BigInt tmp;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = n, pc = n;
    for (std::size_t j = k; j < n && pr == n; ++j) {
      for (std::size_t i = k; i < n; ++i) {
        if (sgn(a[i][j]) != 0) {
          pr = i;
          pc = j;
          break;
        }
      }
    }
    if (pr == n) break;
    if (pr != k) {
      std::swap(a[pr], a[k]);
      out.sign = -out.sign;
    }
    if (pc != k) {
      for (auto& row : a) std::swap(row[pc], row[k]);
      out.sign = -out.sign;
    }
    const BigInt& pivot = a[k][k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const BigInt& lead = a[i][k];
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_mul(tmp.get_mpz_t(), pivot.get_mpz_t(), a[i][j].get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), a[k][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = pivot;
    ++out.rank;
  }
  out.last_pivot = prev;
  return out;
}

}  // namespace

BigPoly char_poly(const IntMatrix& m) {
  const std::size_t n = m.dimension();
  if (n > kExactPathCap) {
    throw UseNullityPath("dimension " + std::to_string(n) + " exceeds the exact characteristic polynomial cap of " +
                         std::to_string(kExactPathCap));
  }
  if (n == 0) return BigPoly::constant(1);

  // Coefficients highest degree first while the recurrence runs.
  std::vector<BigInt> vect{BigInt(1), BigInt(static_cast<long>(-m(0, 0)))};
  std::vector<BigInt> v, w, toeplitz;
  for (std::size_t r = 1; r < n; ++r) {
    toeplitz.assign(r + 2, BigInt(0));
    toeplitz[0] = 1;
    toeplitz[1] = BigInt(static_cast<long>(-m(r, r)));

    // toeplitz[i] = -R A_r^{i-2} C for the leading r×r block A_r, column C and row R.
    v.assign(r, BigInt(0));
    for (std::size_t i = 0; i < r; ++i) v[i] = BigInt(static_cast<long>(m(i, r)));
    for (std::size_t step = 2; step <= r + 1; ++step) {
      BigInt dot = 0;
      for (std::size_t i = 0; i < r; ++i) addmul(dot, v[i], m(r, i));
      toeplitz[step] = -dot;
      if (step == r + 1) break;
      w.assign(r, BigInt(0));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) {
          const std::int64_t a = m(i, j);
          if (a != 0) addmul(w[i], v[j], a);
        }
      }
      std::swap(v, w);
    }

    std::vector<BigInt> next(r + 2, BigInt(0));
    for (std::size_t i = 0; i < r + 2; ++i) {
      const std::size_t upper = std::min(i, r);
      for (std::size_t j = 0; j <= upper; ++j) {
        mpz_addmul(next[i].get_mpz_t(), toeplitz[i - j].get_mpz_t(), vect[j].get_mpz_t());
      }
    }
    vect = std::move(next);
  }
  std::reverse(vect.begin(), vect.end());
  return BigPoly(std::move(vect));
}

std::size_t nullity_at(const IntMatrix& m, const BigInt& mu) {
  BigMatrix a = shifted(m, mu);
  return m.dimension() - bareiss(a).rank;
}

BigInt determinant(const IntMatrix& m) {
  if (m.dimension() == 0) return 1;
  BigMatrix a = shifted(m, 0);
  const auto e = bareiss(a);
  if (e.rank < m.dimension()) return 0;
  return e.sign * e.last_pivot;
}

Deflation poly_div_linear(const BigPoly& p, const BigInt& mu) {
  return poly_div_factor(p, BigPoly::linear(mu));
}

Deflation poly_div_factor(const BigPoly& p, const BigPoly& factor) {
  if (p.is_zero()) throw std::invalid_argument("cannot deflate the zero polynomial");
  if (factor.degree() < 1) throw std::invalid_argument("deflation factor must have positive degree");
  Deflation out{p, 0};
  while (out.quotient.degree() >= factor.degree()) {
    auto [q, r] = out.quotient.divmod_monic(factor);
    if (!r.is_zero()) break;
    out.quotient = std::move(q);
    ++out.multiplicity;
  }
  return out;
}

SurdValue solve_monic_quadratic(const BigPoly& p) {
  if (p.degree() != 2 || !p.is_monic()) throw std::invalid_argument("expected a monic quadratic");
  const BigInt b = p.coefficient(1);
  const BigInt c = p.coefficient(0);
  const BigInt disc = b * b - 4 * c;
  if (sgn(disc) < 0) throw ComplexRoots("quadratic " + p.to_string() + " has complex roots");
  return SurdValue(-b, disc, 2);
}

BigPoly entry_factor(const EigenvalueExpr& value) {
  if (const auto* v = std::get_if<BigInt>(&value)) return BigPoly::linear(*v);
  if (const auto* s = std::get_if<SurdValue>(&value)) {
    const BigInt two_p = 2 * s->p();
    const BigInt norm = s->p() * s->p() - s->d();
    const BigInt q2 = s->q() * s->q();
    if (two_p % s->q() != 0 || norm % q2 != 0) {
      throw MalformedSpectrum("surd pair " + s->to_string() + " does not clear to integer coefficients");
    }
    return BigPoly(std::vector<BigInt>{norm / q2, -(two_p / s->q()), BigInt(1)});
  }
  const auto& poly = std::get<PolyRoots>(value).poly;
  if (!poly.is_monic()) throw MalformedSpectrum("polynomial factor " + poly.to_string() + " is not monic");
  return poly;
}

BigPoly spectrum_to_poly(const SpectrumSpec& spectrum) {
  BigPoly product = BigPoly::constant(1);
  for (const auto& entry : spectrum.entries) {
    if (entry.multiplicity == 0) throw MalformedSpectrum("spectrum entries need positive multiplicity");
    product *= entry_factor(entry.value).pow(static_cast<unsigned>(entry.multiplicity));
  }
  return product;
}

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
  std::map<BigInt, unsigned> factors;
  for (BigInt f = 2; f * f <= n; ++f) {
    while (n % f == 0) {
      ++factors[f];
      n /= f;
    }
  }
  if (n > 1) ++factors[n];
  std::vector<BigInt> divisors{BigInt(1)};
  for (const auto& [prime, exponent] : factors) {
    const std::size_t count = divisors.size();
    BigInt power = 1;
    for (unsigned e = 1; e <= exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < count; ++i) divisors.push_back(divisors[i] * power);
    }
  }
  std::sort(divisors.begin(), divisors.end());
  return divisors;
}

}  // namespace

std::vector<std::pair<BigInt, std::size_t>> integer_roots(const BigPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("zero polynomial has every integer as a root");
  std::vector<std::pair<BigInt, std::size_t>> roots;
  auto [rest, zero_mult] = poly_div_linear(p, 0);
  if (zero_mult > 0) roots.emplace_back(0, zero_mult);
  if (rest.degree() < 1) return roots;
  for (const auto& d : positive_divisors(abs(rest.coefficient(0)))) {
    for (const BigInt& candidate : {BigInt(-d), d}) {
      auto [q, mult] = poly_div_linear(rest, candidate);
      if (mult == 0) continue;
      roots.emplace_back(candidate, mult);
      rest = std::move(q);
    }
    if (rest.degree() < 1) break;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

SpectrumSpec extract_spectrum(const BigPoly& p, std::span<const double> hints) {
  if (!p.is_monic()) throw std::invalid_argument("extract_spectrum expects a monic polynomial");
  std::vector<double> pool(hints.begin(), hints.end());
  std::sort(pool.begin(), pool.end());
  auto take_nearest = [&pool](double target, std::size_t count) {
    for (std::size_t c = 0; c < count && !pool.empty(); ++c) {
      auto best = std::min_element(pool.begin(), pool.end(), [target](double a, double b) {
        return std::abs(a - target) < std::abs(b - target);
      });
      pool.erase(best);
    }
  };

  SpectrumSpec out;
  out.source = "extracted";
  BigPoly rest = p;

  std::vector<long> candidates;
  for (const double h : hints) candidates.push_back(std::lround(h));
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const long c : candidates) {
    if (rest.degree() < 1) break;
    auto [q, mult] = poly_div_linear(rest, BigInt(c));
    if (mult == 0) continue;
    out.entries.push_back({BigInt(c), mult});
    take_nearest(static_cast<double>(c), mult);
    rest = std::move(q);
  }

  for (std::size_t i = 0; i < pool.size() && rest.degree() >= 2; ++i) {
    for (std::size_t j = i + 1; j < pool.size(); ++j) {
      const BigInt sum(static_cast<long>(std::llround(pool[i] + pool[j])));
      const BigInt product(static_cast<long>(std::llround(pool[i] * pool[j])));
      const BigPoly quadratic(std::vector<BigInt>{product, -sum, BigInt(1)});
      if (sgn(sum * sum - 4 * product) < 0) continue;
      auto [q, mult] = poly_div_factor(rest, quadratic);
      if (mult == 0) continue;
      const SurdValue pair = solve_monic_quadratic(quadratic);
      out.entries.push_back({pair, mult});
      take_nearest(pair.plus_value(), mult);
      take_nearest(pair.minus_value(), mult);
      rest = std::move(q);
      i = static_cast<std::size_t>(-1);  // restart over the shrunken pool
      break;
    }
  }

  if (rest.degree() >= 1) out.entries.push_back({PolyRoots{rest}, 1});
  return out;
}

}  // namespace cocg
