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

#include "cocg/numeric_eig.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cocg/errors.hpp"

namespace cocg {

namespace {

constexpr int kMaxSweeps = 100;

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) sum += a[i * n + j] * a[i * n + j];
  return std::sqrt(sum);
}

}  // namespace

NumericSpectrum jacobi_spectrum(const IntMatrix& m, double tol) {
  if (!m.is_symmetric()) throw NonSymmetricMatrix("Jacobi eigensolver needs a symmetric matrix");
  const std::size_t n = m.dimension();
  if (tol < std::numeric_limits<double>::epsilon() * static_cast<double>(n)) {
    throw std::invalid_argument("Jacobi tolerance below machine epsilon times dimension");
  }

  std::vector<double> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = static_cast<double>(m(i, j));
  const double threshold = tol * m.frobenius_norm();

  int sweep = 0;
  while (off_diagonal_norm(a, n) > threshold) {
    if (++sweep > kMaxSweeps) throw std::runtime_error("Jacobi iteration did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        double t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (std::abs(theta) > 1e150) t = 0.5 / std::abs(theta);
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a[p * n + p] -= t * apq;
        a[q * n + q] += t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
          if (r == p || r == q) continue;
          const double g = a[r * n + p];
          const double h = a[r * n + q];
          const double rp = g - s * (h + g * tau);
          const double rq = h + s * (g - h * tau);
          a[r * n + p] = a[p * n + r] = rp;
          a[r * n + q] = a[q * n + r] = rq;
        }
      }
    }
  }

  NumericSpectrum out;
  out.tolerance = tol;
  out.values.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.values.push_back(a[i * n + i]);
  std::sort(out.values.begin(), out.values.end());
  return out;
}

std::vector<double> real_roots(const BigPoly& p) {
  if (p.degree() < 1) return {};
  std::vector<long double> c;
  for (const auto& x : p.coefficients()) c.push_back(static_cast<long double>(x.get_d()));
  for (auto& x : c) x /= c.back();

  std::vector<double> roots;
  auto eval = [](const std::vector<long double>& poly, long double x, long double& derivative) {
    long double value = 0.0L;
    derivative = 0.0L;
    for (auto it = poly.rbegin(); it != poly.rend(); ++it) {
      derivative = derivative * x + value;
      value = value * x + *it;
    }
    return value;
  };

  while (c.size() > 1) {
    long double bound = 0.0L;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) bound = std::max(bound, std::abs(c[i]));
    long double x = 1.0L + bound;
    for (int iter = 0; iter < 100000; ++iter) {
      long double dp = 0.0L;
      const long double fx = eval(c, x, dp);
      if (fx == 0.0L || dp == 0.0L) break;
      const long double step = fx / dp;
      x -= step;
      if (std::abs(step) <= 1e-18L * std::max(1.0L, std::abs(x))) break;
    }
    roots.push_back(static_cast<double>(x));
    // Synthetic division by (λ - x).
    std::vector<long double> q(c.size() - 1);
    long double carry = 0.0L;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
      carry = c[i + 1] + carry * x;
      q[i] = carry;
    }
    c = std::move(q);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

std::vector<double> numeric_values(const SpectrumSpec& spectrum) {
  std::vector<double> out;
  for (const auto& entry : spectrum.entries) {
    std::vector<double> one;
    if (const auto* v = std::get_if<BigInt>(&entry.value)) {
      one.push_back(v->get_d());
    } else if (const auto* s = std::get_if<SurdValue>(&entry.value)) {
      one.push_back(s->minus_value());
      one.push_back(s->plus_value());
    } else {
      one = real_roots(std::get<PolyRoots>(entry.value).poly);
    }
    for (std::size_t k = 0; k < entry.multiplicity; ++k) out.insert(out.end(), one.begin(), one.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

SpectrumMatch match_values(std::span<const double> numeric, std::span<const double> claimed, double tol) {
  if (numeric.size() != claimed.size()) {
    throw MultiplicityMismatch("claimed spectrum has " + std::to_string(claimed.size()) + " roots, numeric has " +
                               std::to_string(numeric.size()));
  }
  std::vector<double> a(numeric.begin(), numeric.end());
  std::vector<double> b(claimed.begin(), claimed.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  SpectrumMatch out;
  out.matched = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double r = std::abs(a[i] - b[i]) / std::max(1.0, std::abs(b[i]));
    out.residuals.push_back(r);
    out.max_residual = std::max(out.max_residual, r);
    if (!(r <= tol)) out.matched = false;
  }
  return out;
}

SpectrumMatch match_spectra(const NumericSpectrum& numeric, const SpectrumSpec& claimed, double tol) {
  if (claimed.root_count() != numeric.values.size()) {
    throw MultiplicityMismatch("claimed spectrum has " + std::to_string(claimed.root_count()) +
                               " roots, numeric has " + std::to_string(numeric.values.size()));
  }
  const auto values = numeric_values(claimed);
  return match_values(numeric.values, values, tol);
}

}  // namespace cocg
