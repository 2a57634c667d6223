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
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cocg/closed_forms.hpp"
#include "cocg/exact_linear.hpp"
#include "cocg/graph.hpp"
#include "cocg/group.hpp"
#include "cocg/numeric_eig.hpp"
#include "cocg/spectrum.hpp"

namespace cocg {

enum class Outcome { ExactMatch, Mismatch, Degenerate };

std::string_view outcome_name(Outcome outcome) noexcept;

/// Group, centralizers and co-centralizer graph for one parameter choice.
struct CocentralizerData {
  explicit CocentralizerData(GroupSpec group_spec) : spec(std::move(group_spec)) {}

  GroupSpec spec;
  std::size_t group_order = 0;
  std::size_t center_size = 0;
  CentralizerFamily family;
  Graph graph;  // complement of the centralizer graph
  std::optional<MultipartiteShape> parts;
  /// Set when the graph has no distance matrix (a single cardinality class
  /// makes the complement edgeless).
  std::optional<std::string> degenerate_reason;
};

CocentralizerData build_cocentralizer(const GroupSpec& spec);

IntMatrix matrix_of_kind(const IntMatrix& distances, MatrixKind kind);

struct VerifyOptions {
  double match_tolerance = kDefaultMatchTolerance;
  double sweep_tolerance = kDefaultSweepTolerance;
  std::size_t exact_cap = kExactPathCap;
};

struct VariantResult {
  DqVariant variant;
  Outcome outcome;
  std::string detail;
};

struct NullityCheck {
  BigInt value;
  std::size_t claimed = 0;
  std::size_t computed = 0;
};

struct VerificationReport {
  VerificationReport(GroupSpec group_spec, MatrixKind matrix_kind, GraphShape shape = DegenerateShape{})
      : spec(std::move(group_spec)), kind(matrix_kind), claimed_shape(std::move(shape)) {}

  GroupSpec spec;
  MatrixKind kind;
  GraphShape claimed_shape;
  std::optional<MultipartiteShape> found_parts;
  Outcome outcome = Outcome::Mismatch;
  /// Mismatch pinpoint or degeneracy reason; empty on a match.
  std::string detail;
  /// "charpoly", "nullity" or "none".
  std::string exact_path = "none";
  std::optional<BigPoly> charpoly;
  std::optional<SpectrumSpec> claimed;
  /// Exact spectrum extracted from the characteristic polynomial.
  std::optional<SpectrumSpec> computed;
  std::vector<NullityCheck> nullity_checks;
  std::vector<double> numeric;
  double numeric_residual = -1.0;  // negative when the oracle did not run
  std::vector<VariantResult> variants;
  std::vector<std::string> notes;
};

/// group -> centralizers -> centralizer graph -> complement -> matrix ->
/// exact spectrum -> closed-form comparison, plus the Jacobi cross-check.
/// Every failure mode lands in the report outcome.
VerificationReport verify_family(const GroupSpec& spec, MatrixKind kind, const VerifyOptions& options = {});
VerificationReport verify_family(const CocentralizerData& data, MatrixKind kind, const VerifyOptions& options = {});

/// Closed-form distance characteristic polynomial of K_{n_1..n_k} against
/// brute force. Throws InvalidParameter for fewer than two parts or more
/// vertices than the exact characteristic-polynomial path allows.
bool verify_lemma1(std::span<const std::size_t> parts);

struct ScanOptions {
  int fixed_n = 1;  // metacyclic groups scan m with n fixed
  std::uint64_t cross_check_max_order = 5000;
  std::size_t cross_check_max_vertices = kExactPathCap;
  bool integral_only = false;  // keep only integral or disagreeing rows
  unsigned jobs = 1;
};

struct ScanRow {
  int parameter = 0;
  bool degenerate = false;
  bool integral = false;  // closed-form condition
  std::string witness;
  bool cross_checked = false;
  std::optional<bool> exact_integral;
  bool agrees = true;
};

struct ScanResult {
  ScanResult(Family scan_family, MatrixKind scan_kind) : family(scan_family), kind(scan_kind) {}

  Family family;
  MatrixKind kind;
  std::string condition;
  std::vector<ScanRow> rows;
};

/// The group a scan parameter denotes (n, m, or k; metacyclic uses fixed_n).
GroupSpec scan_spec(Family family, int parameter, const ScanOptions& options);

ScanResult scan_integrality(Family family, MatrixKind kind, int first, int last, const ScanOptions& options = {});

/// Exact integrality of the brute-force spectrum (exact path only).
bool exact_spectrum_integral(const CocentralizerData& data, MatrixKind kind, const VerifyOptions& options = {});

/// Runs task(i) for i in [0, count) on `jobs` threads (0 = hardware concurrency).
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task);

}  // namespace cocg
