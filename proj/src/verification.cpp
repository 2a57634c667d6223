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

#include "cocg/verification.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "cocg/errors.hpp"

namespace cocg {

std::string_view outcome_name(Outcome outcome) noexcept {
  switch (outcome) {
    case Outcome::ExactMatch: return "ExactMatch";
    case Outcome::Mismatch: return "Mismatch";
    case Outcome::Degenerate: return "Degenerate";
  }
  return "?";
}

CocentralizerData build_cocentralizer(const GroupSpec& spec) {
  const FiniteGroup group = build_group(spec);
  CocentralizerData data(spec);
  data.group_order = group.order();
  data.center_size = center(group).size();
  data.family = proper_centralizer_family(group);
  data.graph = complement(centralizer_graph(data.family));
  data.parts = recognize_complete_multipartite(data.graph);

  const auto& cards = data.family.cardinalities;
  if (std::adjacent_find(cards.begin(), cards.end(), std::not_equal_to<>()) == cards.end()) {
    data.degenerate_reason = "co-centralizer graph edgeless: all " + std::to_string(cards.size()) +
                             " proper centralizers have cardinality " + std::to_string(cards.front());
  } else if (!is_connected(data.graph)) {
    data.degenerate_reason = "co-centralizer graph disconnected";
  }
  return data;
}

IntMatrix matrix_of_kind(const IntMatrix& distances, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::D: return distances;
    case MatrixKind::DL: return dl_matrix(distances);
    case MatrixKind::DQ: return dq_matrix(distances);
  }
  throw std::logic_error("unknown matrix kind");
}

namespace {

std::string parts_string(const MultipartiteShape& shape) {
  std::string out = "K_{";
  for (std::size_t i = 0; i < shape.parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(shape.parts[i]);
  }
  return out + "}";
}

std::string first_difference(const BigPoly& computed, const SpectrumSpec& claim) {
  for (const auto& entry : claim.entries) {
    const BigPoly factor = entry_factor(entry.value);
    const auto actual = poly_div_factor(computed, factor).multiplicity;
    if (actual != entry.multiplicity) {
      return "factor " + factor.to_string() + ": computed multiplicity " + std::to_string(actual) + ", claimed " +
             std::to_string(entry.multiplicity);
    }
  }
  return "characteristic polynomial differs from the claimed product";
}

// Shared state for comparing several claims against one matrix.
class ClaimChecker {
 public:
  ClaimChecker(const IntMatrix& m, const NumericSpectrum& numeric, const VerifyOptions& options)
      : m_(m), numeric_(numeric), options_(options) {
    if (m.dimension() <= options.exact_cap) charpoly_ = char_poly(m);
  }

  const std::optional<BigPoly>& charpoly() const { return charpoly_; }

  struct Result {
    Outcome outcome = Outcome::Mismatch;
    std::string detail;
    double residual = -1.0;
    std::vector<NullityCheck> nullities;
  };

  Result check(const SpectrumSpec& claim) {
    Result r;
    if (claim.root_count() != m_.dimension()) {
      r.detail = "claimed root count " + std::to_string(claim.root_count()) + " differs from dimension " +
                 std::to_string(m_.dimension());
      return r;
    }
    const auto match = match_spectra(numeric_, claim, options_.match_tolerance);
    r.residual = match.max_residual;

    if (charpoly_) {
      if (spectrum_to_poly(claim) != *charpoly_) {
        r.detail = first_difference(*charpoly_, claim);
        return r;
      }
    } else {
      for (const auto& entry : claim.entries) {
        const auto* value = std::get_if<BigInt>(&entry.value);
        if (!value) continue;
        const std::size_t computed = nullity(*value);
        r.nullities.push_back({*value, entry.multiplicity, computed});
        if (computed != entry.multiplicity) {
          r.detail = "eigenvalue " + value->get_str() + ": nullity " + std::to_string(computed) + ", claimed " +
                     std::to_string(entry.multiplicity);
          return r;
        }
      }
    }
    if (!match.matched) {
      std::ostringstream out;
      out << "numeric cross-check residual " << match.max_residual << " exceeds " << options_.match_tolerance;
      r.detail = out.str();
      return r;
    }
    r.outcome = Outcome::ExactMatch;
    return r;
  }

 private:
  std::size_t nullity(const BigInt& value) {
    const auto key = value.get_str();
    if (const auto it = cache_.find(key); it != cache_.end()) return it->second;
    return cache_[key] = nullity_at(m_, value);
  }

  const IntMatrix& m_;
  const NumericSpectrum& numeric_;
  const VerifyOptions& options_;
  std::optional<BigPoly> charpoly_;
  std::map<std::string, std::size_t> cache_;
};

}  // namespace

VerificationReport verify_family(const GroupSpec& spec, MatrixKind kind, const VerifyOptions& options) {
  return verify_family(build_cocentralizer(spec), kind, options);
}

VerificationReport verify_family(const CocentralizerData& data, MatrixKind kind, const VerifyOptions& options) {
  VerificationReport report(data.spec, kind, family_cocentralizer_shape(data.spec));
  report.found_parts = data.parts;

  if (data.degenerate_reason) {
    report.outcome = Outcome::Degenerate;
    report.detail = *data.degenerate_reason;
    if (!is_degenerate(report.claimed_shape)) {
      report.outcome = Outcome::Mismatch;
      report.detail = "claimed " + to_string(report.claimed_shape) + " but " + *data.degenerate_reason;
    }
    return report;
  }
  if (const auto* d = std::get_if<DegenerateShape>(&report.claimed_shape)) {
    report.outcome = Outcome::Degenerate;
    report.detail = "no closed form: " + d->reason;
    if (data.parts) report.notes.push_back("brute-force co-centralizer graph is " + parts_string(*data.parts));
    return report;
  }
  if (!data.parts || *data.parts != parts_of(report.claimed_shape)) {
    report.outcome = Outcome::Mismatch;
    report.detail = "shape: claimed " + to_string(report.claimed_shape) + ", found " +
                    (data.parts ? parts_string(*data.parts) : std::string("a non-multipartite graph"));
    return report;
  }

  const IntMatrix m = matrix_of_kind(distance_matrix(data.graph), kind);
  const NumericSpectrum numeric = jacobi_spectrum(m, options.sweep_tolerance);
  report.numeric = numeric.values;

  ClaimChecker checker(m, numeric, options);
  report.exact_path = checker.charpoly() ? "charpoly" : "nullity";
  report.charpoly = checker.charpoly();
  if (report.charpoly) report.computed = extract_spectrum(*report.charpoly, numeric.values);

  std::vector<DqVariant> variants{DqVariant::ProofBlocks};
  if (data.spec.family() == Family::PSL2 && kind == MatrixKind::DQ) {
    variants = {DqVariant::StatementText, DqVariant::ProofBlocks};
  }

  std::optional<std::size_t> chosen;
  std::vector<ClaimChecker::Result> results;
  std::vector<SpectrumSpec> claims;
  for (const auto variant : variants) {
    claims.push_back(family_spectrum_claim(data.spec, kind, variant));
    results.push_back(checker.check(claims.back()));
    if (variants.size() > 1) report.variants.push_back({variant, results.back().outcome, results.back().detail});
    if (!chosen && results.back().outcome == Outcome::ExactMatch) chosen = results.size() - 1;
  }
  const std::size_t pick = chosen.value_or(results.size() - 1);
  report.outcome = results[pick].outcome;
  report.detail = results[pick].detail;
  report.numeric_residual = results[pick].residual;
  report.nullity_checks = results[pick].nullities;
  report.claimed = claims[pick];

  if (variants.size() > 1) {
    for (const auto& v : report.variants) {
      std::string note = std::string(variant_name(v.variant)) + "=" + std::string(outcome_name(v.outcome));
      if (!v.detail.empty()) note += " (" + v.detail + ")";
      report.notes.push_back(std::move(note));
    }
  }
  if (report.exact_path == "nullity") {
    report.notes.push_back("integer eigenvalues confirmed by nullity; remaining roots by the numeric oracle");
  }
  return report;
}

bool verify_lemma1(std::span<const std::size_t> parts) {
  if (parts.size() < 2) throw InvalidParameter("multipartite check needs at least two parts");
  std::size_t total = 0;
  for (const auto p : parts) total += p;
  if (total > kExactPathCap) {
    throw InvalidParameter("multipartite check supports at most " + std::to_string(kExactPathCap) + " vertices");
  }
  const Graph g = complete_multipartite_graph(parts);
  return char_poly(distance_matrix(g)) == multipartite_distance_charpoly(parts);
}

GroupSpec scan_spec(Family family, int parameter, const ScanOptions& options) {
  switch (family) {
    case Family::Q4N: return GroupSpec::q4n(parameter);
    case Family::D2M: return GroupSpec::d2m(parameter);
    case Family::QD2N: return GroupSpec::qd2n(parameter);
    case Family::M2MN: return GroupSpec::m2mn(parameter, options.fixed_n);
    case Family::PSL2: return GroupSpec::psl2(parameter);
  }
  throw InvalidParameter("unknown family");
}

bool exact_spectrum_integral(const CocentralizerData& data, MatrixKind kind, const VerifyOptions& options) {
  if (data.degenerate_reason) throw DegenerateSpec(*data.degenerate_reason);
  const IntMatrix m = matrix_of_kind(distance_matrix(data.graph), kind);
  const auto numeric = jacobi_spectrum(m, options.sweep_tolerance);
  return extract_spectrum(char_poly(m), numeric.values).is_integral();
}

ScanResult scan_integrality(Family family, MatrixKind kind, int first, int last, const ScanOptions& options) {
  if (first > last) throw InvalidParameter("scan range is empty");
  ScanResult result(family, kind);
  const std::size_t count = static_cast<std::size_t>(last - first) + 1;
  std::vector<std::optional<ScanRow>> rows(count);
  std::mutex condition_mutex;

  parallel_for(count, options.jobs, [&](std::size_t i) {
    ScanRow row;
    row.parameter = first + static_cast<int>(i);
    const GroupSpec spec = scan_spec(family, row.parameter, options);
    const GraphShape shape = family_cocentralizer_shape(spec);
    if (is_degenerate(shape)) {
      row.degenerate = true;
      row.witness = std::get<DegenerateShape>(shape).reason;
    } else {
      const auto report = integrality_conditions(spec, kind);
      row.integral = report.integral;
      row.witness = report.witness;
      {
        std::lock_guard lock(condition_mutex);
        if (result.condition.empty()) result.condition = report.condition;
      }
      const std::size_t vertices = parts_of(shape).vertex_count();
      if (spec.expected_order() <= options.cross_check_max_order && vertices <= options.cross_check_max_vertices) {
        row.cross_checked = true;
        row.exact_integral = exact_spectrum_integral(build_cocentralizer(spec), kind);
        row.agrees = *row.exact_integral == row.integral;
      }
    }
    if (!options.integral_only || row.integral || !row.agrees) rows[i] = std::move(row);
  });

  for (auto& row : rows)
    if (row) result.rows.push_back(std::move(*row));
  return result;
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& task) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, std::max<std::size_t>(count, 1)));
  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> workers;
  for (unsigned w = 0; w < jobs; ++w) {
    workers.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          task(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : workers) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace cocg
