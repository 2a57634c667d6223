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

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>

#include "cocg/bigint.hpp"
#include "cocg/graph.hpp"
#include "cocg/group.hpp"
#include "cocg/poly.hpp"
#include "cocg/spectrum.hpp"

namespace cocg {

enum class MatrixKind { D, DL, DQ };

std::string_view kind_name(MatrixKind kind) noexcept;
std::optional<MatrixKind> parse_kind(std::string_view text) noexcept;

/// The third D^Q eigenvalue class of PSL(2,2^k) has two candidate closed
/// forms, 3·2^(2k-1) + 2^(k-1) + 3 and the same with -3. Brute force sides
/// with -3.
enum class DqVariant { StatementText, ProofBlocks };

std::string_view variant_name(DqVariant variant) noexcept;

struct StarShape {
  std::size_t leaves;
  friend bool operator==(const StarShape&, const StarShape&) = default;
};
struct TripartiteShape {
  std::size_t a, b, c;
  friend bool operator==(const TripartiteShape&, const TripartiteShape&) = default;
};
struct DegenerateShape {
  std::string reason;
  friend bool operator==(const DegenerateShape&, const DegenerateShape&) = default;
};
using GraphShape = std::variant<StarShape, TripartiteShape, DegenerateShape>;

std::string to_string(const GraphShape& shape);
bool is_degenerate(const GraphShape& shape) noexcept;
/// Parts sorted descending; empty for degenerate shapes.
MultipartiteShape parts_of(const GraphShape& shape);

/// 3×3 integer matrix of block-row sums of an equitable three-part partition.
struct QuotientMatrix3 {
  std::array<std::array<BigInt, 3>, 3> entries;

  std::array<BigInt, 3> row_sums() const;
  /// λ³ - tr·λ² + (sum of principal 2×2 minors)·λ - det.
  BigPoly char_poly() const;
};

/// Distance characteristic polynomial of K_{n_1,...,n_k} in closed form:
/// (λ+2)^{n-k} [∏(λ-n_i+2) - Σ n_i ∏_{j≠i}(λ-n_j+2)].
/// Throws InvalidParameter for fewer than two parts or an empty part.
BigPoly multipartite_distance_charpoly(std::span<const std::size_t> parts);

/// The co-centralizer graph each family is claimed to have.
GraphShape family_cocentralizer_shape(const GroupSpec& spec);

// Spectra of the star K_{1,n}, n >= 2.
SpectrumSpec star_distance_spectrum(std::size_t n);
SpectrumSpec star_dl_spectrum(std::size_t n);
SpectrumSpec star_dq_spectrum(std::size_t n);

// PSL(2,2^k), k >= 2.
BigPoly psl_distance_cubic_paper(int k);
BigPoly psl_distance_charpoly_paper(int k);
SpectrumSpec psl_distance_spectrum(int k);
SpectrumSpec psl_dl_spectrum(int k);
QuotientMatrix3 psl_dq_quotient(int k);
SpectrumSpec psl_dq_spectrum(int k, DqVariant variant);

/// The closed-form spectrum for one family and matrix kind, written in the
/// family's own parameters. Throws DegenerateSpec when the family has no
/// star or tripartite claim at these parameters.
SpectrumSpec family_spectrum_claim(const GroupSpec& spec, MatrixKind kind,
                                   DqVariant variant = DqVariant::ProofBlocks);

struct IntegralityReport {
  bool integral = false;
  std::string condition;  // the condition as evaluated
  std::string witness;    // the quantity that decided it
};

/// Evaluates the family's closed-form integrality condition for `kind`.
/// Throws DegenerateSpec for degenerate parameters.
IntegralityReport integrality_conditions(const GroupSpec& spec, MatrixKind kind);

}  // namespace cocg
