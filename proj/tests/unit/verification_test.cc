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

#include "cocg/errors.hpp"
#include "cocg/report_io.hpp"
#include "cocg/verification.hpp"

namespace cocg {
namespace {

TEST(VerifyFamily, QuaternionMatch) {
  const auto r = verify_family(GroupSpec::q4n(3), MatrixKind::D);
  EXPECT_EQ(r.outcome, Outcome::ExactMatch) << r.detail;
  EXPECT_EQ(r.claimed->to_string(), "-2×2, 2 ± √7");
  EXPECT_EQ(r.exact_path, "charpoly");
  EXPECT_LE(r.numeric_residual, 1e-8);
  ASSERT_TRUE(r.found_parts);
  EXPECT_EQ(r.found_parts->parts, (std::vector<std::size_t>{3, 1}));
}

TEST(VerifyFamily, Q8IsDegenerate) {
  for (const auto kind : {MatrixKind::D, MatrixKind::DL, MatrixKind::DQ}) {
    const auto r = verify_family(GroupSpec::q4n(2), kind);
    EXPECT_EQ(r.outcome, Outcome::Degenerate);
    EXPECT_NE(r.detail.find("edgeless"), std::string::npos) << r.detail;
  }
}

TEST(VerifyFamily, MetacyclicDegeneracyFoundStructurally) {
  for (int n = 1; n <= 4; ++n) {
    const auto r = verify_family(GroupSpec::m2mn(4, n), MatrixKind::D);
    EXPECT_EQ(r.outcome, Outcome::Degenerate);
    EXPECT_NE(r.detail.find("edgeless"), std::string::npos);
  }
}

TEST(VerifyFamily, PslSignlessVariants) {
  const auto r = verify_family(GroupSpec::psl2(2), MatrixKind::DQ);
  EXPECT_EQ(r.outcome, Outcome::ExactMatch);
  ASSERT_EQ(r.variants.size(), 2u);
  EXPECT_EQ(r.variants[0].variant, DqVariant::StatementText);
  EXPECT_EQ(r.variants[0].outcome, Outcome::Mismatch);
  EXPECT_NE(r.variants[0].detail.find("λ - 29"), std::string::npos) << r.variants[0].detail;
  EXPECT_EQ(r.variants[1].outcome, Outcome::ExactMatch);
  EXPECT_EQ(r.computed->to_string().find("23×5") != std::string::npos, true);
}

TEST(VerifyFamily, SmallestPslIsOutsideClosedForms) {
  const auto r = verify_family(GroupSpec::psl2(1), MatrixKind::D);
  EXPECT_EQ(r.outcome, Outcome::Degenerate);
  ASSERT_TRUE(r.found_parts);
  EXPECT_EQ(r.found_parts->parts, (std::vector<std::size_t>{3, 1}));
}

TEST(VerifyFamily, NullityPathWhenCapIsLow) {
  VerifyOptions options;
  options.exact_cap = 8;
  const auto r = verify_family(GroupSpec::psl2(2), MatrixKind::DL, options);
  EXPECT_EQ(r.exact_path, "nullity");
  EXPECT_EQ(r.outcome, Outcome::ExactMatch) << r.detail;
  EXPECT_EQ(r.nullity_checks.size(), 5u);
  EXPECT_FALSE(r.charpoly);
}

TEST(VerifyFamily, Deterministic) {
  const auto a = report_json(verify_family(GroupSpec::qd2n(5), MatrixKind::DQ)).dump();
  const auto b = report_json(verify_family(GroupSpec::qd2n(5), MatrixKind::DQ)).dump();
  EXPECT_EQ(a, b);
}

TEST(VerifyFamily, SmallGridAllKinds) {
  for (const auto& spec : {GroupSpec::q4n(5), GroupSpec::d2m(3), GroupSpec::d2m(6), GroupSpec::d2m(9),
                           GroupSpec::qd2n(4), GroupSpec::m2mn(3, 2), GroupSpec::m2mn(6, 3), GroupSpec::m2mn(10, 1)}) {
    for (const auto kind : {MatrixKind::D, MatrixKind::DL, MatrixKind::DQ}) {
      const auto r = verify_family(spec, kind);
      EXPECT_EQ(r.outcome, Outcome::ExactMatch) << spec.label() << ' ' << kind_name(kind) << ": " << r.detail;
    }
  }
}

TEST(VerifyLemma, Examples) {
  for (const std::vector<std::size_t>& parts :
       {std::vector<std::size_t>{1, 2}, {1, 1}, {3, 3, 3, 3}, {5, 10, 6}}) {
    EXPECT_TRUE(verify_lemma1(parts));
  }
  EXPECT_THROW(verify_lemma1(std::vector<std::size_t>{4}), InvalidParameter);
  EXPECT_THROW(verify_lemma1(std::vector<std::size_t>{64, 65}), InvalidParameter);
}

TEST(VerifyLemma, RandomParts) {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::size_t> count(2, 5), size(1, 6);
  for (int t = 0; t < 30; ++t) {
    std::vector<std::size_t> parts(count(rng));
    for (auto& p : parts) p = size(rng);
    ASSERT_TRUE(verify_lemma1(parts));
  }
}

TEST(ScanIntegrality, QuaternionDistanceNeverIntegral) {
  ScanOptions options;
  options.integral_only = true;
  options.cross_check_max_vertices = 24;  // keeps the exact cross-checks cheap
  const auto scan = scan_integrality(Family::Q4N, MatrixKind::D, 3, 20000, options);
  EXPECT_TRUE(scan.rows.empty());
}

TEST(ScanIntegrality, LaplacianAlwaysIntegralAndCrossChecked) {
  const auto scan = scan_integrality(Family::D2M, MatrixKind::DL, 3, 30);
  for (const auto& row : scan.rows) {
    if (row.degenerate) {
      EXPECT_EQ(row.parameter, 4);
      continue;
    }
    EXPECT_TRUE(row.integral) << row.parameter;
    EXPECT_TRUE(row.cross_checked);
    EXPECT_TRUE(row.agrees);
  }
}

TEST(ScanIntegrality, PslSignlessReportsCubic) {
  const auto scan = scan_integrality(Family::PSL2, MatrixKind::DQ, 2, 3);
  ASSERT_EQ(scan.rows.size(), 2u);
  for (const auto& row : scan.rows) {
    EXPECT_FALSE(row.integral);
    EXPECT_NE(row.witness.find("λ^3"), std::string::npos) << row.witness;
    EXPECT_TRUE(row.agrees);
  }
}

TEST(ScanIntegrality, ParallelMatchesSerial) {
  ScanOptions serial, parallel;
  parallel.jobs = 4;
  const auto a = scan_json(scan_integrality(Family::QD2N, MatrixKind::DQ, 4, 9, serial)).dump();
  const auto b = scan_json(scan_integrality(Family::QD2N, MatrixKind::DQ, 4, 9, parallel)).dump();
  EXPECT_EQ(a, b);
}

TEST(ParallelFor, PropagatesErrors) {
  EXPECT_THROW(parallel_for(10, 3, [](std::size_t i) {
                 if (i == 7) throw std::runtime_error("boom");
               }),
               std::runtime_error);
}

}  // namespace
}  // namespace cocg
