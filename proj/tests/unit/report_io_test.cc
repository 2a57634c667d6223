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

#include "cocg/report_io.hpp"

namespace cocg {
namespace {

TEST(ReportJson, SchemaFields) {
  const auto j = report_json(verify_family(GroupSpec::q4n(3), MatrixKind::D));
  EXPECT_EQ(validate_report_json(j), "");
  EXPECT_EQ(j["family"], "q4n");
  EXPECT_EQ(j["params"]["n"], 3);
  EXPECT_EQ(j["outcome"], "ExactMatch");
  EXPECT_EQ(j["charpoly"], nlohmann::json({"-12", "-28", "-15", "0", "1"}));
  const auto& surd = j["spectrum"][1];
  EXPECT_EQ(surd["value_kind"], "surd");
  EXPECT_EQ(surd["p"], "2");
  EXPECT_EQ(surd["d"], "7");
  EXPECT_EQ(surd["q"], "1");
  EXPECT_EQ(surd["mult"], 1);
}

TEST(ReportJson, DegenerateAndVariants) {
  const auto d = report_json(verify_family(GroupSpec::d2m(4), MatrixKind::D));
  EXPECT_EQ(validate_report_json(d), "");
  EXPECT_TRUE(d["charpoly"].is_null());
  EXPECT_TRUE(d["numeric_residual"].is_null());

  const auto p = report_json(verify_family(GroupSpec::psl2(2), MatrixKind::DQ));
  EXPECT_EQ(validate_report_json(p), "");
  EXPECT_EQ(p["variants"].size(), 2u);
  EXPECT_EQ(p["spectrum"].back()["value_kind"], "poly");
}

TEST(ReportJson, ValidatorRejects) {
  auto j = report_json(verify_family(GroupSpec::q4n(3), MatrixKind::DL));
  j["outcome"] = "Maybe";
  EXPECT_NE(validate_report_json(j), "");
  j = report_json(verify_family(GroupSpec::q4n(3), MatrixKind::DL));
  j["spectrum"][0]["p"] = 0;
  EXPECT_NE(validate_report_json(j), "");
  EXPECT_NE(validate_report_json(nlohmann::json::array()), "");
}

TEST(ReportCsv, FixedColumns) {
  const auto header = report_csv_header();
  EXPECT_EQ(header, "family,params,kind,outcome,shape,exact_path,charpoly,spectrum,numeric_residual,detail,notes\n");
  const auto row = report_csv_row(verify_family(GroupSpec::q4n(3), MatrixKind::D));
  EXPECT_EQ(row.rfind("q4n,n=3,D,ExactMatch,", 0), 0u) << row;
  EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
  EXPECT_EQ(csv_field("say \"x\""), "\"say \"\"x\"\"\"");
}

TEST(ScanCsv, Rows) {
  const auto scan = scan_integrality(Family::Q4N, MatrixKind::DL, 3, 4);
  const auto text = scan_csv(scan);
  EXPECT_EQ(text.rfind("q4n,DL,3,0,1,", 0), 0u) << text;
}

}  // namespace
}  // namespace cocg
