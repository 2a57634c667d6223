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

#include <span>
#include <vector>

#include "cocg/graph.hpp"
#include "cocg/poly.hpp"
#include "cocg/spectrum.hpp"

namespace cocg {

inline constexpr double kDefaultSweepTolerance = 1e-12;
inline constexpr double kDefaultMatchTolerance = 1e-8;

struct NumericSpectrum {
  std::vector<double> values;  // ascending
  double tolerance = kDefaultSweepTolerance;
};

/// Cyclic-by-row Jacobi rotations until the off-diagonal Frobenius mass drops
/// below tol·‖M‖_F. Throws NonSymmetricMatrix for non-symmetric input and
/// std::invalid_argument when tol < machine epsilon · dimension.
NumericSpectrum jacobi_spectrum(const IntMatrix& m, double tol = kDefaultSweepTolerance);

/// Real roots of a real-rooted polynomial (Newton from the Cauchy bound with
/// deflation), ascending.
std::vector<double> real_roots(const BigPoly& p);

/// All roots a spectrum denotes, with multiplicity, ascending.
std::vector<double> numeric_values(const SpectrumSpec& spectrum);

struct SpectrumMatch {
  bool matched = false;
  std::vector<double> residuals;  // |numeric - claimed| / max(1, |claimed|), sorted pairing
  double max_residual = 0.0;
};

/// Sorted pairing of both value lists. Throws MultiplicityMismatch when the
/// claimed root count differs from the numeric length.
SpectrumMatch match_spectra(const NumericSpectrum& numeric, const SpectrumSpec& claimed,
                            double tol = kDefaultMatchTolerance);

SpectrumMatch match_values(std::span<const double> numeric, std::span<const double> claimed, double tol);

}  // namespace cocg
