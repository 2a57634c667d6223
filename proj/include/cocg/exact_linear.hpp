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
#include <span>
#include <utility>
#include <vector>

#include "cocg/bigint.hpp"
#include "cocg/graph.hpp"
#include "cocg/poly.hpp"
#include "cocg/spectrum.hpp"
#include "cocg/surd.hpp"

namespace cocg {

/// Largest dimension for which char_poly runs.
inline constexpr std::size_t kExactPathCap = 128;

/// det(λI - M) by Berkowitz's division-free recurrence.
/// Throws UseNullityPath above kExactPathCap.
BigPoly char_poly(const IntMatrix& m);

/// n - rank(M - μI); rank by fraction-free (Bareiss) elimination with full pivoting.
std::size_t nullity_at(const IntMatrix& m, const BigInt& mu);

/// Bareiss determinant.
BigInt determinant(const IntMatrix& m);

struct Deflation {
  BigPoly quotient;
  std::size_t multiplicity = 0;
};

/// Divides out (λ - μ) as often as it divides exactly.
Deflation poly_div_linear(const BigPoly& p, const BigInt& mu);

/// Divides out a monic factor as often as it divides exactly.
Deflation poly_div_factor(const BigPoly& p, const BigPoly& factor);

/// Roots of a monic quadratic as a normalized conjugate pair.
/// Throws ComplexRoots for a negative discriminant.
SurdValue solve_monic_quadratic(const BigPoly& p);

/// (λ - p/q)... product over entries. Throws MalformedSpectrum when a surd
/// pair does not clear to integer coefficients or a PolyRoots factor is not monic.
BigPoly spectrum_to_poly(const SpectrumSpec& spectrum);

/// The monic integer factor one entry contributes (before multiplicity).
BigPoly entry_factor(const EigenvalueExpr& value);

/// All integer roots of p with multiplicity, via divisors of the lowest
/// nonzero coefficient. Intended for low-degree factors.
std::vector<std::pair<BigInt, std::size_t>> integer_roots(const BigPoly& p);

/// Exact spectrum of a monic characteristic polynomial.
///
/// `hints` are numeric eigenvalues (e.g. from the Jacobi oracle) used only to
/// propose candidates: integer candidates are confirmed by exact deflation,
/// pairs of leftover hints by exact division by the rounded quadratic. What
/// remains is returned as one PolyRoots entry.
SpectrumSpec extract_spectrum(const BigPoly& p, std::span<const double> hints);

}  // namespace cocg
