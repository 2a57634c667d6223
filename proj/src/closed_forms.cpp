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

#include "cocg/closed_forms.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cocg/errors.hpp"
#include "cocg/exact_linear.hpp"

namespace cocg {

std::string_view kind_name(MatrixKind kind) noexcept {
  switch (kind) {
    case MatrixKind::D: return "D";
    case MatrixKind::DL: return "DL";
    case MatrixKind::DQ: return "DQ";
  }
  return "?";
}

std::optional<MatrixKind> parse_kind(std::string_view text) noexcept {
  for (const auto kind : {MatrixKind::D, MatrixKind::DL, MatrixKind::DQ}) {
    if (kind_name(kind) == text) return kind;
  }
  return std::nullopt;
}

std::string_view variant_name(DqVariant variant) noexcept {
  return variant == DqVariant::StatementText ? "StatementText" : "ProofBlocks";
}

std::string to_string(const GraphShape& shape) {
  struct Visitor {
    std::string operator()(const StarShape& s) const { return "K_{1," + std::to_string(s.leaves) + "}"; }
    std::string operator()(const TripartiteShape& t) const {
      return "K_{" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + "}";
    }
    std::string operator()(const DegenerateShape& d) const { return "degenerate (" + d.reason + ")"; }
  };
  return std::visit(Visitor{}, shape);
}

bool is_degenerate(const GraphShape& shape) noexcept { return std::holds_alternative<DegenerateShape>(shape); }

MultipartiteShape parts_of(const GraphShape& shape) {
  MultipartiteShape out;
  if (const auto* s = std::get_if<StarShape>(&shape)) out.parts = {1, s->leaves};
  if (const auto* t = std::get_if<TripartiteShape>(&shape)) out.parts = {t->a, t->b, t->c};
  std::sort(out.parts.begin(), out.parts.end(), std::greater<>());
  return out;
}

std::array<BigInt, 3> QuotientMatrix3::row_sums() const {
  std::array<BigInt, 3> sums;
  for (std::size_t i = 0; i < 3; ++i) sums[i] = entries[i][0] + entries[i][1] + entries[i][2];
  return sums;
}

BigPoly QuotientMatrix3::char_poly() const {
  const auto& a = entries;
  const BigInt trace = a[0][0] + a[1][1] + a[2][2];
  const BigInt minors = (a[0][0] * a[1][1] - a[0][1] * a[1][0]) + (a[0][0] * a[2][2] - a[0][2] * a[2][0]) +
                        (a[1][1] * a[2][2] - a[1][2] * a[2][1]);
  const BigInt det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
                     a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
                     a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  return BigPoly(std::vector<BigInt>{-det, minors, -trace, BigInt(1)});
}

BigPoly multipartite_distance_charpoly(std::span<const std::size_t> parts) {
  if (parts.size() < 2) throw InvalidParameter("complete multipartite graph needs at least two parts");
  std::size_t total = 0;
  for (const auto p : parts) {
    if (p == 0) throw InvalidParameter("parts must be positive");
    total += p;
  }
  auto shifted = [](std::size_t part) {  // λ - n_i + 2
    return BigPoly(std::vector<BigInt>{BigInt(2) - BigInt(static_cast<unsigned long>(part)), BigInt(1)});
  };
  BigPoly product = BigPoly::constant(1);
  for (const auto p : parts) product *= shifted(p);
  BigPoly bracket = product;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    BigPoly others = BigPoly::constant(BigInt(static_cast<unsigned long>(parts[i])));
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (j != i) others *= shifted(parts[j]);
    bracket -= others;
  }
  return BigPoly({2, 1}).pow(static_cast<unsigned>(total - parts.size())) * bracket;
}

namespace {

void add_entry(SpectrumSpec& s, EigenvalueExpr value, const BigInt& multiplicity) {
  if (sgn(multiplicity) < 0) throw std::logic_error("negative multiplicity in closed form");
  if (sgn(multiplicity) == 0) return;
  s.entries.push_back({std::move(value), static_cast<std::size_t>(multiplicity.get_ui())});
}

void require_star(std::size_t n) {
  if (n < 2) throw InvalidParameter("star spectra need K_{1,n} with n >= 2");
}

void require_psl(int k) {
  if (k < 2) throw InvalidParameter("PSL(2,2^k) closed forms need k >= 2");
}

}  // namespace

GraphShape family_cocentralizer_shape(const GroupSpec& spec) {
  const std::string equal_cardinalities = "all proper centralizers have cardinality 4; co-centralizer graph edgeless";
  switch (spec.family()) {
    case Family::Q4N:
      if (spec.n() == 2) return DegenerateShape{equal_cardinalities};
      return StarShape{static_cast<std::size_t>(spec.n())};
    case Family::D2M:
    case Family::M2MN: {
      const auto m = static_cast<std::size_t>(spec.m());
      if (m == 4) {
        return DegenerateShape{spec.family() == Family::D2M
                                   ? equal_cardinalities
                                   : "all proper centralizers share one cardinality; co-centralizer graph edgeless"};
      }
      return StarShape{m % 2 == 0 ? m / 2 : m};
    }
    case Family::QD2N: return StarShape{std::size_t{1} << (spec.n() - 2)};
    case Family::PSL2: {
      if (spec.k() < 2) return DegenerateShape{"closed forms are stated for k >= 2"};
      const std::size_t q = std::size_t{1} << spec.k();
      return TripartiteShape{q + 1, q / 2 * (q + 1), q / 2 * (q - 1)};
    }
  }
  throw std::logic_error("unknown family");
}

SpectrumSpec star_distance_spectrum(std::size_t n) {
  require_star(n);
  const BigInt N(static_cast<unsigned long>(n));
  SpectrumSpec s;
  s.source = "star K_{1," + std::to_string(n) + "} distance";
  add_entry(s, BigInt(-2), N - 1);
  add_entry(s, SurdValue(N - 1, N * N - N + 1, 1), 1);
  return s;
}

SpectrumSpec star_dl_spectrum(std::size_t n) {
  require_star(n);
  const BigInt N(static_cast<unsigned long>(n));
  SpectrumSpec s;
  s.source = "star K_{1," + std::to_string(n) + "} distance Laplacian";
  add_entry(s, BigInt(0), 1);
  add_entry(s, BigInt(N + 1), 1);
  add_entry(s, BigInt(2 * N + 1), N - 1);
  return s;
}

SpectrumSpec star_dq_spectrum(std::size_t n) {
  require_star(n);
  const BigInt N(static_cast<unsigned long>(n));
  SpectrumSpec s;
  s.source = "star K_{1," + std::to_string(n) + "} distance signless Laplacian";
  add_entry(s, BigInt(2 * N - 3), N - 1);
  add_entry(s, SurdValue(5 * N - 3, 9 * N * N - 14 * N + 9, 2), 1);
  return s;
}

BigPoly psl_distance_cubic_paper(int k) {
  require_psl(k);
  const unsigned u = static_cast<unsigned>(k);
  const BigInt c2 = 4 - pow2(2 * u + 1) - pow2(u + 1);
  const BigInt c1 = 4 + 3 * pow2(4 * u - 2) + 3 * pow2(3 * u) - 23 * pow2(2 * u - 2) - pow2(u + 3);
  const BigInt c0 = -pow2(5 * u) + pow2(4 * u - 1) + 7 * pow2(3 * u) - 5 * pow2(2 * u - 1) - pow2(u + 3);
  return BigPoly(std::vector<BigInt>{c0, c1, c2, BigInt(1)});
}

BigPoly psl_distance_charpoly_paper(int k) {
  const BigPoly cubic = psl_distance_cubic_paper(k);
  const unsigned u = static_cast<unsigned>(k);
  const BigInt exponent = pow2(u) + pow2(2 * u) - 2;
  return BigPoly({2, 1}).pow(static_cast<unsigned>(exponent.get_ui())) * cubic;
}

SpectrumSpec psl_distance_spectrum(int k) {
  require_psl(k);
  const unsigned u = static_cast<unsigned>(k);
  SpectrumSpec s;
  s.source = "psl2(k=" + std::to_string(k) + ") distance";
  add_entry(s, BigInt(-2), pow2(u) + pow2(2 * u) - 2);
  add_entry(s, PolyRoots{psl_distance_cubic_paper(k)}, 1);
  return s;
}

SpectrumSpec psl_dl_spectrum(int k) {
  require_psl(k);
  const unsigned u = static_cast<unsigned>(k);
  const BigInt q = pow2(u);
  const BigInt half = pow2(u - 1);
  SpectrumSpec s;
  s.source = "psl2(k=" + std::to_string(k) + ") distance Laplacian";
  add_entry(s, BigInt(0), 1);
  add_entry(s, BigInt(3 * pow2(2 * u - 1) + 3 * half + 1), half * (q + 1) - 1);
  add_entry(s, BigInt(3 * pow2(2 * u - 1) + half + 1), half * (q - 1) - 1);
  add_entry(s, BigInt(pow2(u + 1) + pow2(2 * u) + 2), q);
  add_entry(s, BigInt(pow2(2 * u) + q + 1), 2);
  return s;
}

QuotientMatrix3 psl_dq_quotient(int k) {
  require_psl(k);
  const unsigned u = static_cast<unsigned>(k);
  const BigInt q = pow2(u);
  const BigInt half = pow2(u - 1);
  const BigInt three_halves = 3 * pow2(2 * u - 1);
  QuotientMatrix3 m;
  m.entries[0] = {pow2(u + 1) + pow2(2 * u) - 2 + 2 * (q + 1), half * (q + 1), half * (q - 1)};
  m.entries[1] = {q + 1, three_halves + 3 * half - 3 + q * (q + 1), half * (q - 1)};
  m.entries[2] = {q + 1, half * (q + 1), three_halves + half - 3 + q * (q - 1)};
  return m;
}

SpectrumSpec psl_dq_spectrum(int k, DqVariant variant) {
  require_psl(k);
  const unsigned u = static_cast<unsigned>(k);
  const BigInt q = pow2(u);
  const BigInt half = pow2(u - 1);
  const BigInt three_halves = 3 * pow2(2 * u - 1);
  SpectrumSpec s;
  s.source = "psl2(k=" + std::to_string(k) + ") distance signless Laplacian, " + std::string(variant_name(variant));
  add_entry(s, BigInt(pow2(u + 1) + pow2(2 * u) - 2), q);
  add_entry(s, BigInt(three_halves + 3 * half - 3), half * (q + 1) - 1);
  const BigInt third = three_halves + half + (variant == DqVariant::StatementText ? 3 : -3);
  add_entry(s, third, half * (q - 1) - 1);
  add_entry(s, PolyRoots{psl_dq_quotient(k).char_poly()}, 1);
  return s;
}

namespace {

// Dihedral and metacyclic groups share their closed-form spectra.
SpectrumSpec dihedral_type_claim(const BigInt& m, MatrixKind kind) {
  SpectrumSpec s;
  const bool even = m % 2 == 0;
  switch (kind) {
    case MatrixKind::D:
      add_entry(s, BigInt(-2), even ? BigInt(m / 2 - 1) : BigInt(m - 1));
      if (even) {
        // (m/2 - 1) ± (1/2)√(m² - 2m + 4)
        add_entry(s, SurdValue(m - 2, m * m - 2 * m + 4, 2), 1);
      } else {
        add_entry(s, SurdValue(m - 1, m * m - m + 1, 1), 1);
      }
      break;
    case MatrixKind::DL:
      add_entry(s, BigInt(0), 1);
      if (even) {
        add_entry(s, BigInt(m / 2 + 1), 1);
        add_entry(s, BigInt(m + 1), m / 2 - 1);
      } else {
        add_entry(s, BigInt(m + 1), 1);
        add_entry(s, BigInt(2 * m + 1), m - 1);
      }
      break;
    case MatrixKind::DQ:
      if (even) {
        add_entry(s, BigInt(m - 3), m / 2 - 1);
        // (1/2)[(5m/2 - 3) ± √(9m²/4 - 7m + 9)]
        add_entry(s, SurdValue(5 * m - 6, 9 * m * m - 28 * m + 36, 4), 1);
      } else {
        add_entry(s, BigInt(2 * m - 3), m - 1);
        add_entry(s, SurdValue(5 * m - 3, 9 * m * m - 14 * m + 9, 2), 1);
      }
      break;
  }
  return s;
}

SpectrumSpec quasidihedral_claim(int n, MatrixKind kind) {
  const unsigned u = static_cast<unsigned>(n);
  const BigInt h = pow2(u - 2);
  SpectrumSpec s;
  switch (kind) {
    case MatrixKind::D:
      add_entry(s, BigInt(-2), h - 1);
      add_entry(s, SurdValue(h - 1, pow2(2 * u - 4) - h + 1, 1), 1);
      break;
    case MatrixKind::DL:
      add_entry(s, BigInt(0), 1);
      add_entry(s, BigInt(h + 1), 1);
      add_entry(s, BigInt(pow2(u - 1) + 1), h - 1);
      break;
    case MatrixKind::DQ:
      add_entry(s, BigInt(pow2(u - 1) - 3), h - 1);
      add_entry(s, SurdValue(5 * h - 3, 9 * pow2(2 * u - 4) - 14 * h + 9, 2), 1);
      break;
  }
  return s;
}

}  // namespace

SpectrumSpec family_spectrum_claim(const GroupSpec& spec, MatrixKind kind, DqVariant variant) {
  const GraphShape shape = family_cocentralizer_shape(spec);
  if (const auto* d = std::get_if<DegenerateShape>(&shape)) {
    throw DegenerateSpec(spec.label() + ": " + d->reason);
  }
  SpectrumSpec s;
  switch (spec.family()) {
    case Family::Q4N: {
      const auto n = static_cast<std::size_t>(spec.n());
      s = kind == MatrixKind::D ? star_distance_spectrum(n)
                                : kind == MatrixKind::DL ? star_dl_spectrum(n) : star_dq_spectrum(n);
      break;
    }
    case Family::D2M:
    case Family::M2MN: s = dihedral_type_claim(BigInt(spec.m()), kind); break;
    case Family::QD2N: s = quasidihedral_claim(spec.n(), kind); break;
    case Family::PSL2:
      s = kind == MatrixKind::D ? psl_distance_spectrum(spec.k())
                                : kind == MatrixKind::DL ? psl_dl_spectrum(spec.k())
                                                         : psl_dq_spectrum(spec.k(), variant);
      break;
  }
  s.source = spec.label() + " " + std::string(kind_name(kind)) + " closed form";
  if (spec.family() == Family::PSL2 && kind == MatrixKind::DQ) s.source += ", " + std::string(variant_name(variant));
  return s;
}

namespace {

IntegralityReport square_test(const std::string& name, const BigInt& radicand) {
  IntegralityReport r;
  r.integral = is_perfect_square(radicand);
  r.condition = name + " is a perfect square";
  r.witness = name + " = " + radicand.get_str();
  return r;
}

IntegralityReport even_root_test(const std::string& name, const BigInt& radicand) {
  IntegralityReport r;
  r.integral = is_perfect_square(radicand) && isqrt(radicand) % 2 == 0;
  r.condition = "sqrt(" + name + ") is an even integer";
  r.witness = name + " = " + radicand.get_str();
  return r;
}

// base ± √radicand both even (the root must be an integer first).
IntegralityReport parity_square_test(const std::string& base_name, const BigInt& base, const std::string& name,
                                     const BigInt& radicand) {
  IntegralityReport r;
  const bool square = is_perfect_square(radicand);
  const BigInt root = square ? isqrt(radicand) : BigInt(0);
  r.integral = square && (base + root) % 2 == 0 && (base - root) % 2 == 0;
  r.condition = "(" + base_name + ") ± sqrt(" + name + ") is even";
  r.witness = base_name + " = " + base.get_str() + ", " + name + " = " + radicand.get_str();
  return r;
}

IntegralityReport rational_cubic_test(const std::string& name, const BigPoly& cubic) {
  IntegralityReport r;
  std::size_t rational = 0;
  for (const auto& [root, mult] : integer_roots(cubic)) rational += mult;
  r.integral = rational == static_cast<std::size_t>(cubic.degree());
  r.condition = "the " + name + " has only rational roots";
  r.witness = cubic.to_string() + " (" + std::to_string(rational) + " rational roots)";
  return r;
}

}  // namespace

IntegralityReport integrality_conditions(const GroupSpec& spec, MatrixKind kind) {
  const GraphShape shape = family_cocentralizer_shape(spec);
  if (const auto* d = std::get_if<DegenerateShape>(&shape)) {
    throw DegenerateSpec(spec.label() + ": " + d->reason);
  }
  if (kind == MatrixKind::DL) {
    return {true, "distance Laplacian spectrum is integral for every parameter", "unconditional"};
  }

  switch (spec.family()) {
    case Family::Q4N: {
      const BigInt n(spec.n());
      if (kind == MatrixKind::D) return square_test("n^2-n+1", n * n - n + 1);
      return parity_square_test("5n-3", 5 * n - 3, "9n^2-14n+9", 9 * n * n - 14 * n + 9);
    }
    case Family::D2M:
    case Family::M2MN: {
      const BigInt m(spec.m());
      const bool even = m % 2 == 0;
      if (kind == MatrixKind::D) {
        return even ? even_root_test("m^2-2m+4", m * m - 2 * m + 4) : square_test("m^2-m+1", m * m - m + 1);
      }
      if (even) return parity_square_test("5m/2-3", 5 * m / 2 - 3, "9m^2/4-7m+9", 9 * m * m / 4 - 7 * m + 9);
      return parity_square_test("5m-3", 5 * m - 3, "9m^2-14m+9", 9 * m * m - 14 * m + 9);
    }
    case Family::QD2N: {
      const unsigned u = static_cast<unsigned>(spec.n());
      const BigInt h = pow2(u - 2);
      if (kind == MatrixKind::D) return square_test("2^(2n-4)-2^(n-2)+1", pow2(2 * u - 4) - h + 1);
      return parity_square_test("5*2^(n-2)-3", 5 * h - 3, "9*2^(2n-4)-14*2^(n-2)+9", 9 * pow2(2 * u - 4) - 14 * h + 9);
    }
    case Family::PSL2:
      if (kind == MatrixKind::D) return rational_cubic_test("distance cubic", psl_distance_cubic_paper(spec.k()));
      return rational_cubic_test("quotient matrix cubic", psl_dq_quotient(spec.k()).char_poly());
  }
  throw std::logic_error("unknown family");
}

}  // namespace cocg
