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

#include <gtest/gtest.h>

#include <random>

#include "cocg/closed_forms.hpp"
#include "cocg/errors.hpp"
#include "cocg/exact_linear.hpp"
#include "cocg/graph.hpp"
#include "support/oracles.hpp"

namespace cocg {
namespace {

BigPoly lin(long root) { return BigPoly::linear(BigInt(root)); }

IntMatrix multipartite_distance(std::vector<std::size_t> parts) {
  return distance_matrix(complete_multipartite_graph(parts));
}

TEST(MultipartiteCharpoly, Examples) {
  EXPECT_EQ(multipartite_distance_charpoly(std::vector<std::size_t>{1, 1}), (BigPoly{-1, 0, 1}));
  EXPECT_EQ(multipartite_distance_charpoly(std::vector<std::size_t>{1, 2}), lin(-2) * BigPoly({-2, -2, 1}));
  EXPECT_EQ(multipartite_distance_charpoly(std::vector<std::size_t>{5, 10, 6}),
            lin(-2).pow(18) * BigPoly({-520, 264, -36, 1}));
}

TEST(MultipartiteCharpoly, AgreesWithInterpolationOracle) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 25; ++t) {
    std::uniform_int_distribution<std::size_t> parts_count(2, 4), size(1, 4);
    std::vector<std::size_t> parts(parts_count(rng));
    for (auto& p : parts) p = size(rng);
    ASSERT_EQ(multipartite_distance_charpoly(parts), oracle::interpolated_charpoly(multipartite_distance(parts)));
  }
}

TEST(Shapes, Families) {
  EXPECT_EQ(family_cocentralizer_shape(GroupSpec::q4n(3)), GraphShape(StarShape{3}));
  EXPECT_TRUE(is_degenerate(family_cocentralizer_shape(GroupSpec::q4n(2))));
  EXPECT_TRUE(is_degenerate(family_cocentralizer_shape(GroupSpec::d2m(4))));
  EXPECT_TRUE(is_degenerate(family_cocentralizer_shape(GroupSpec::m2mn(4, 3))));
  EXPECT_EQ(family_cocentralizer_shape(GroupSpec::psl2(2)), GraphShape(TripartiteShape{5, 10, 6}));
  EXPECT_EQ(to_string(GraphShape(TripartiteShape{5, 10, 6})), "K_{5,10,6}");
  EXPECT_EQ(to_string(GraphShape(StarShape{3})), "K_{1,3}");
  EXPECT_EQ(parts_of(GraphShape(TripartiteShape{5, 10, 6})).parts, (std::vector<std::size_t>{10, 6, 5}));
}

TEST(StarSpectra, Examples) {
  EXPECT_EQ(star_distance_spectrum(3).to_string(), "-2×2, 2 ± √7");
  EXPECT_EQ(star_distance_spectrum(2).to_string(), "-2, 1 ± √3");
  EXPECT_EQ(spectrum_to_poly(star_dl_spectrum(3)), lin(0) * lin(4) * lin(7).pow(2));
  EXPECT_EQ(spectrum_to_poly(star_dl_spectrum(2)), lin(0) * lin(3) * lin(5));
  EXPECT_EQ(spectrum_to_poly(star_dq_spectrum(3)), lin(3).pow(2) * BigPoly({24, -12, 1}));
  EXPECT_EQ(star_dq_spectrum(2).to_string(), "1, (7 ± √17)/2");
}

TEST(StarSpectra, AgreeWithBruteForceAndTrace) {
  for (std::size_t n = 2; n <= 40; ++n) {
    const IntMatrix d = multipartite_distance({n, 1});
    ASSERT_EQ(spectrum_to_poly(star_distance_spectrum(n)), char_poly(d)) << n;
    ASSERT_EQ(spectrum_to_poly(star_dl_spectrum(n)), char_poly(dl_matrix(d))) << n;
    ASSERT_EQ(spectrum_to_poly(star_dq_spectrum(n)), char_poly(dq_matrix(d))) << n;
    EXPECT_EQ(star_distance_spectrum(n).root_sum(), 0);
    EXPECT_EQ(star_dl_spectrum(n).root_sum(), BigRational(2 * n * n));
    EXPECT_EQ(star_dq_spectrum(n).root_sum(), BigRational(2 * n * n));
  }
}

TEST(PslDistance, ClosedCubicMatchesExpansion) {
  EXPECT_EQ(psl_distance_cubic_paper(2), (BigPoly{-520, 264, -36, 1}));
  EXPECT_EQ(psl_distance_cubic_paper(2).coefficient(2), -36);
  for (int k = 2; k <= 5; ++k) {
    const std::size_t q = 1u << k;
    const std::vector<std::size_t> parts{q + 1, q * (q + 1) / 2, q * (q - 1) / 2};
    EXPECT_EQ(psl_distance_charpoly_paper(k), multipartite_distance_charpoly(parts)) << k;
  }
}

TEST(PslLaplacian, Spectra) {
  EXPECT_EQ(spectrum_to_poly(psl_dl_spectrum(2)),
            lin(0) * lin(31).pow(9) * lin(27).pow(5) * lin(26).pow(4) * lin(21).pow(2));
  EXPECT_EQ(spectrum_to_poly(psl_dl_spectrum(3)),
            lin(0) * lin(109).pow(35) * lin(101).pow(27) * lin(82).pow(8) * lin(73).pow(2));
  for (int k = 2; k <= 6; ++k) {
    const std::size_t q = 1u << k;
    EXPECT_EQ(psl_dl_spectrum(k).root_count(), q * q + q + 1);
    EXPECT_EQ(psl_dq_spectrum(k, DqVariant::ProofBlocks).root_count(), q * q + q + 1);
    EXPECT_EQ(psl_dq_spectrum(k, DqVariant::StatementText).root_count(), q * q + q + 1);
  }
}

TEST(PslQuotient, Entries) {
  const auto qm = psl_dq_quotient(2);
  const std::array<std::array<long, 3>, 3> expected{{{32, 10, 6}, {5, 47, 6}, {5, 10, 35}}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) EXPECT_EQ(qm.entries[i][j], expected[i][j]);
  EXPECT_EQ(qm.row_sums(), (std::array<BigInt, 3>{48, 58, 50}));
  for (int k = 2; k <= 6; ++k) EXPECT_EQ(psl_dq_quotient(k).entries[1][0], (1 << k) + 1);
  EXPECT_EQ(qm.char_poly(), lin(32) * BigPoly({1505, -82, 1}));
}

TEST(PslQuotient, RowSumsMatchBlockSums) {
  for (int k = 2; k <= 4; ++k) {
    const std::size_t q = 1u << k;
    const std::vector<std::size_t> parts{q + 1, q * (q + 1) / 2, q * (q - 1) / 2};
    const std::size_t n = parts[0] + parts[1] + parts[2];
    const auto rs = psl_dq_quotient(k).row_sums();
    for (std::size_t p = 0; p < 3; ++p) {
      // every D^Q row sum in part p is 2 * transmission = 2 (n + p - 2)
      EXPECT_EQ(rs[p], BigInt(2 * (n + parts[p] - 2))) << "k=" << k << " part " << p;
    }
  }
}

TEST(PslSignless, Variants) {
  const auto proof = psl_dq_spectrum(2, DqVariant::ProofBlocks);
  const auto text = psl_dq_spectrum(2, DqVariant::StatementText);
  const IntMatrix dq = dq_matrix(multipartite_distance({5, 10, 6}));
  EXPECT_EQ(spectrum_to_poly(proof), char_poly(dq));
  EXPECT_NE(spectrum_to_poly(text), char_poly(dq));
  EXPECT_EQ(text.to_string().find("29×5") != std::string::npos, true);
}

TEST(FamilyClaims, DegenerateThrows) {
  EXPECT_THROW(family_spectrum_claim(GroupSpec::q4n(2), MatrixKind::D), DegenerateSpec);
  EXPECT_THROW(family_spectrum_claim(GroupSpec::d2m(4), MatrixKind::DL), DegenerateSpec);
}

TEST(Integrality, PerfectSquare) {
  EXPECT_TRUE(is_perfect_square(BigInt(49)));
  EXPECT_FALSE(is_perfect_square(BigInt(7)));
  EXPECT_FALSE(is_perfect_square(BigInt(7 * 7 - 7 + 1)));
}

TEST(Integrality, Conditions) {
  EXPECT_TRUE(integrality_conditions(GroupSpec::q4n(3), MatrixKind::DL).integral);
  EXPECT_FALSE(integrality_conditions(GroupSpec::q4n(3), MatrixKind::D).integral);
  EXPECT_TRUE(integrality_conditions(GroupSpec::psl2(2), MatrixKind::DL).integral);
  EXPECT_FALSE(integrality_conditions(GroupSpec::psl2(2), MatrixKind::DQ).integral);
}

TEST(Integrality, StarConditionsMatchExactSpectrum) {
  for (std::size_t n = 3; n <= 60; ++n) {
    const auto q4n = GroupSpec::q4n(static_cast<int>(n));
    EXPECT_EQ(integrality_conditions(q4n, MatrixKind::D).integral, star_distance_spectrum(n).is_integral()) << n;
    EXPECT_EQ(integrality_conditions(q4n, MatrixKind::DQ).integral, star_dq_spectrum(n).is_integral()) << n;
  }
}

}  // namespace
}  // namespace cocg
