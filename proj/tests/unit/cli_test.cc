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
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include "json.hpp"

#include "cocg/report_io.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + COCG_CLI_PATH + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (const std::size_t n = fread(buf.data(), 1, buf.size(), pipe)) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

TEST(Cli, Group) {
  const auto r = run("group --family q4n -n 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("order         12"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("{6:1, 4:3}"), std::string::npos);
  const auto p = run("group --family psl2 -k 2 --format json");
  EXPECT_EQ(p.code, 0);
  const auto j = nlohmann::json::parse(p.out);
  EXPECT_EQ(j["order"], 60);
  EXPECT_EQ(j["center"], 1);
  EXPECT_EQ(j["proper_centralizers"], 21);
}

TEST(Cli, InvalidInput) {
  EXPECT_EQ(run("group --family q4n -n 1").code, 2);
  EXPECT_EQ(run("group --family nope -n 3").code, 2);
  EXPECT_EQ(run("group --family q4n -n 3 --bogus").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("scan --family q4n --kind D --range 9..3").code, 2);
  EXPECT_EQ(run("spectrum --family q4n -n 3 --kind X").code, 2);
}

TEST(Cli, Spectrum) {
  const auto r = run("spectrum --family qd2n -n 4 --kind D");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("{-2×3, 3 ± √13}"), std::string::npos) << r.out;
  EXPECT_EQ(run("spectrum --family d2m -m 4 --kind D").code, 3);
  const auto dl = run("spectrum --family psl2 -k 2 --kind DL");
  EXPECT_NE(dl.out.find("{0, 21×2, 26×4, 27×5, 31×9}"), std::string::npos) << dl.out;
}

TEST(Cli, VerifyGridJson) {
  const auto r = run("verify --family q4n --n-range 3..40 --kind all --format json --jobs 2");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 114u);
  for (const auto& report : j) {
    EXPECT_EQ(cocg::validate_report_json(report), "");
    EXPECT_EQ(report["outcome"], "ExactMatch");
  }
}

TEST(Cli, VerifyVariantsAndLemma) {
  const auto r = run("verify --family psl2 -k 2 --kind DQ");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("StatementText=Mismatch"), std::string::npos);
  EXPECT_NE(r.out.find("ProofBlocks=ExactMatch"), std::string::npos);
  const auto lemma = run("verify --lemma1 --parts 5,10,6");
  EXPECT_EQ(lemma.code, 0);
  EXPECT_EQ(lemma.out, "true\n");
  EXPECT_EQ(run("verify --family q4n -n 2 --kind D").code, 3);
}

TEST(Cli, Scan) {
  const auto q = run("scan --family q4n --kind D --range 3..1000000 --integral-only --format csv");
  EXPECT_EQ(q.code, 0);
  EXPECT_EQ(q.out, cocg::scan_csv_header());
  const auto d = run("scan --family d2m --kind DL --range 3..60 --format json");
  EXPECT_EQ(d.code, 0);
  const auto j = nlohmann::json::parse(d.out);
  for (const auto& row : j["rows"]) {
    if (!row["degenerate"].get<bool>()) EXPECT_TRUE(row["integral"].get<bool>()) << row.dump();
  }
  const auto p = run("scan --family psl2 --kind DQ --range 2..3");
  EXPECT_EQ(p.code, 0);
  EXPECT_NE(p.out.find("λ^3 - 114·λ^2 + 4129·λ - 48160"), std::string::npos) << p.out;
}

TEST(Cli, ToleranceFromEnvironment) {
  // an absurdly tight tolerance makes the numeric cross-check fail
  EXPECT_EQ(run("verify --family q4n -n 7 --kind D", "COCG_TOL=1e-30").code, 1);
  EXPECT_EQ(run("verify --family q4n -n 7 --kind D --tol 1e-8", "COCG_TOL=1e-30").code, 0);
}

TEST(Cli, OutputFilesAndGraphDump) {
  const auto dir = std::filesystem::temp_directory_path() / "cocg_cli_test";
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  const auto graph = (dir / "g.txt").string();
  EXPECT_EQ(run("verify --family q4n -n 3 --kind D --format json --output-dir " + dir.string() + "/runs --dump-graph " +
                graph)
                .code,
            0);
  std::ifstream g(graph);
  std::string first;
  std::getline(g, first);
  EXPECT_EQ(first, "p 4 3");
  std::size_t files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir / "runs")) {
    ++files;
    EXPECT_EQ(entry.path().extension(), ".json");
  }
  EXPECT_EQ(files, 1u);
  std::filesystem::remove_all(dir);
}

}  // namespace
