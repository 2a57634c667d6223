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

// cocg: co-centralizer graph spectra from the command line.
//
//   cocg group    --family q4n -n 3
//   cocg spectrum --family qd2n -n 4 --kind D
//   cocg verify   --family q4n --n-range 3..40 --kind all --format json
//   cocg verify   --lemma1 --parts 5,10,6
//   cocg scan     --family q4n --kind D --range 3..1000000
//
// Exit codes: 0 ok, 1 mismatch, 2 invalid input, 3 only degenerate results.

#include <chrono>
#include <cstdio>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cocg/closed_forms.hpp"
#include "cocg/errors.hpp"
#include "cocg/exact_linear.hpp"
#include "cocg/graph.hpp"
#include "cocg/group.hpp"
#include "cocg/numeric_eig.hpp"
#include "cocg/report_io.hpp"
#include "cocg/verification.hpp"

namespace {

using namespace cocg;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitDegenerate = 3;

struct Range {
  int first = 0;
  int last = -1;
  bool set() const { return first <= last; }
};

std::optional<Range> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return Range{v, v};
    }
    std::size_t used = 0;
    Range r{std::stoi(text.substr(0, dots), &used), std::stoi(text.substr(dots + 2))};
    if (used != dots || r.first > r.last) return std::nullopt;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

struct RunConfig {
  std::string family;
  int m = 0, n = 0, k = 0;
  std::string kind = "D";
  std::string format = "text";
  std::string output;
  std::string output_dir;
  double tol = kDefaultMatchTolerance;
  unsigned jobs = 0;
  std::string dump_graph;
  std::string n_range, m_range, k_range, range;
  bool lemma1 = false;
  std::vector<std::size_t> parts;
  bool integral_only = false;
};

// Collects output and writes it once, at the end of the run.
class Writer {
 public:
  explicit Writer(const RunConfig& config, std::string config_key)
      : config_(config), key_(std::move(config_key)) {}

  std::ostringstream& out() { return buffer_; }

  void flush() {
    const std::string text = buffer_.str();
    if (!config_.output.empty()) {
      std::ofstream(config_.output, std::ios::app) << text;
    } else if (!config_.output_dir.empty()) {
      std::filesystem::create_directories(config_.output_dir);
      std::ofstream(std::filesystem::path(config_.output_dir) / file_name(), std::ios::app) << text;
    } else {
      std::cout << text;
    }
  }

 private:
  std::string file_name() const {
    std::uint64_t h = 1469598103934665603ull;  // FNV-1a
    for (const unsigned char c : key_) h = (h ^ c) * 1099511628211ull;
    const std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    std::ostringstream name;
    name << std::put_time(&utc, "%Y%m%dT%H%M%SZ") << '-' << std::hex << std::setw(16) << std::setfill('0') << h
         << '.' << (config_.format == "text" ? "txt" : config_.format);
    return name.str();
  }

  const RunConfig& config_;
  std::string key_;
  std::ostringstream buffer_;
};

Family require_family(const RunConfig& c) {
  const auto f = parse_family(c.family);
  if (!f) throw InvalidParameter("unknown family '" + c.family + "'");
  return *f;
}

std::vector<MatrixKind> requested_kinds(const RunConfig& c) {
  if (c.kind == "all") return {MatrixKind::D, MatrixKind::DL, MatrixKind::DQ};
  const auto k = parse_kind(c.kind);
  if (!k) throw InvalidParameter("unknown kind '" + c.kind + "'");
  return {*k};
}

VerifyOptions verify_options(const RunConfig& c) {
  VerifyOptions o;
  o.match_tolerance = c.tol;
  return o;
}

void dump_graph_if_requested(const RunConfig& c, const CocentralizerData& data) {
  if (c.dump_graph.empty()) return;
  std::ofstream(c.dump_graph) << to_edge_list(data.graph);
}

int cmd_group(const RunConfig& c, Writer& w) {
  const GroupSpec spec = GroupSpec::make(require_family(c), c.m, c.n, c.k);
  const CocentralizerData data = build_cocentralizer(spec);
  dump_graph_if_requested(c, data);
  std::map<std::size_t, std::size_t, std::greater<>> multiset;
  for (const auto card : data.family.cardinalities) ++multiset[card];

  if (c.format == "json") {
    json cards = json::array();
    for (const auto& [card, count] : multiset) cards.push_back({{"cardinality", card}, {"count", count}});
    w.out() << json{{"family", std::string(family_name(spec.family()))},
                    {"params", params_json(spec)},
                    {"order", data.group_order},
                    {"center", data.center_size},
                    {"proper_centralizers", data.family.size()},
                    {"cardinalities", cards}}
                   .dump(2)
            << '\n';
  } else if (c.format == "csv") {
    w.out() << "family,params,order,center,cardinality,count\n";
    for (const auto& [card, count] : multiset) {
      w.out() << family_name(spec.family()) << ',' << csv_field(spec.label()) << ',' << data.group_order << ','
              << data.center_size << ',' << card << ',' << count << '\n';
    }
  } else {
    w.out() << spec.label() << "\n  order         " << data.group_order << "\n  center        " << data.center_size
            << "\n  centralizers  " << data.family.size() << "\n  cardinalities {";
    bool first = true;
    for (const auto& [card, count] : multiset) {
      w.out() << (first ? "" : ", ") << card << ':' << count;
      first = false;
    }
    w.out() << "}\n";
  }
  return kExitOk;
}

int cmd_spectrum(const RunConfig& c, Writer& w) {
  const GroupSpec spec = GroupSpec::make(require_family(c), c.m, c.n, c.k);
  const CocentralizerData data = build_cocentralizer(spec);
  dump_graph_if_requested(c, data);
  int exit_code = kExitOk;
  json all = json::array();
  for (const auto kind : requested_kinds(c)) {
    json item{{"family", std::string(family_name(spec.family()))},
              {"params", params_json(spec)},
              {"kind", std::string(kind_name(kind))}};
    if (data.degenerate_reason) {
      item["outcome"] = "Degenerate";
      item["detail"] = *data.degenerate_reason;
      exit_code = kExitDegenerate;
    } else {
      const IntMatrix m = matrix_of_kind(distance_matrix(data.graph), kind);
      const auto numeric = jacobi_spectrum(m);
      item["numeric"] = numeric.values;
      if (m.dimension() <= kExactPathCap) {
        const BigPoly cp = char_poly(m);
        const SpectrumSpec exact = extract_spectrum(cp, numeric.values);
        item["charpoly"] = cp.to_string();
        item["spectrum"] = spectrum_json(exact);
        item["text"] = exact.to_string();
        item["integral"] = exact.is_integral();
      }
    }
    all.push_back(item);
  }

  if (c.format == "json") {
    w.out() << (all.size() == 1 ? all[0] : all).dump(2) << '\n';
  } else if (c.format == "csv") {
    w.out() << "family,params,kind,outcome,charpoly,spectrum,integral\n";
    for (const auto& item : all) {
      w.out() << item["family"].get<std::string>() << ',' << csv_field(spec.label()) << ','
              << item["kind"].get<std::string>() << ',' << (item.contains("outcome") ? "Degenerate" : "ok") << ','
              << csv_field(item.value("charpoly", "")) << ',' << csv_field(item.value("text", "")) << ','
              << (item.contains("integral") ? (item["integral"].get<bool>() ? "1" : "0") : "") << '\n';
    }
  } else {
    for (const auto& item : all) {
      w.out() << spec.label() << "  " << item["kind"].get<std::string>() << '\n';
      if (item.contains("outcome")) {
        w.out() << "  Degenerate: " << item["detail"].get<std::string>() << '\n';
        continue;
      }
      if (item.contains("text")) {
        w.out() << "  charpoly  " << item["charpoly"].get<std::string>() << "\n  exact     {"
                << item["text"].get<std::string>() << "}\n";
      } else {
        w.out() << "  exact     (dimension above " << kExactPathCap << "; numeric only)\n";
      }
      w.out() << "  numeric  ";
      for (const double v : item["numeric"]) w.out() << ' ' << std::setprecision(10) << v;
      w.out() << '\n';
    }
  }
  return exit_code;
}

std::vector<GroupSpec> verify_grid(const RunConfig& c) {
  const Family family = require_family(c);
  auto range_or = [](const std::string& text, int single, const char* name) {
    if (text.empty()) return Range{single, single};
    const auto r = parse_range(text);
    if (!r) throw InvalidParameter(std::string("bad ") + name + " range '" + text + "'");
    return *r;
  };
  const Range ms = range_or(c.m_range, c.m, "m");
  const Range ns = range_or(c.n_range, c.n, "n");
  const Range ks = range_or(c.k_range, c.k, "k");
  std::vector<GroupSpec> specs;
  for (int m = ms.first; m <= ms.last; ++m)
    for (int n = ns.first; n <= ns.last; ++n)
      for (int k = ks.first; k <= ks.last; ++k) specs.push_back(GroupSpec::make(family, m, n, k));
  return specs;
}

int cmd_lemma1(const RunConfig& c, Writer& w) {
  const bool ok = verify_lemma1(c.parts);
  std::string list;
  for (std::size_t i = 0; i < c.parts.size(); ++i) list += (i ? "," : "") + std::to_string(c.parts[i]);
  if (c.format == "json") {
    w.out() << json{{"parts", c.parts}, {"result", ok}}.dump(2) << '\n';
  } else if (c.format == "csv") {
    w.out() << "parts,result\n" << csv_field(list) << ',' << (ok ? "true" : "false") << '\n';
  } else {
    w.out() << (ok ? "true" : "false") << '\n';
  }
  return ok ? kExitOk : kExitMismatch;
}

int cmd_verify(const RunConfig& c, Writer& w) {
  if (c.lemma1) return cmd_lemma1(c, w);
  const auto specs = verify_grid(c);
  const auto kinds = requested_kinds(c);
  const VerifyOptions options = verify_options(c);

  std::vector<VerificationReport> reports(specs.size() * kinds.size(), VerificationReport(specs[0], kinds[0]));
  parallel_for(specs.size(), c.jobs, [&](std::size_t i) {
    const CocentralizerData data = build_cocentralizer(specs[i]);
    for (std::size_t j = 0; j < kinds.size(); ++j) reports[i * kinds.size() + j] = verify_family(data, kinds[j], options);
  });
  if (specs.size() == 1 && !c.dump_graph.empty()) dump_graph_if_requested(c, build_cocentralizer(specs[0]));

  if (c.format == "json") {
    json out = json::array();
    for (const auto& r : reports) out.push_back(report_json(r));
    w.out() << (out.size() == 1 ? out[0] : out).dump(2) << '\n';
  } else if (c.format == "csv") {
    w.out() << report_csv_header();
    for (const auto& r : reports) w.out() << report_csv_row(r);
  } else {
    for (const auto& r : reports) w.out() << report_text(r);
  }

  bool any_mismatch = false, all_degenerate = true;
  for (const auto& r : reports) {
    any_mismatch |= r.outcome == Outcome::Mismatch;
    all_degenerate &= r.outcome == Outcome::Degenerate;
  }
  if (any_mismatch) return kExitMismatch;
  return all_degenerate ? kExitDegenerate : kExitOk;
}

int cmd_scan(const RunConfig& c, Writer& w) {
  const Family family = require_family(c);
  const auto range = parse_range(c.range);
  if (!range) throw InvalidParameter("bad scan range '" + c.range + "'");
  ScanOptions options;
  options.jobs = c.jobs;
  options.integral_only = c.integral_only;
  if (family == Family::M2MN && c.n > 0) options.fixed_n = c.n;

  int exit_code = kExitOk;
  std::vector<ScanResult> scans;
  for (const auto kind : requested_kinds(c)) {
    scans.push_back(scan_integrality(family, kind, range->first, range->last, options));
    for (const auto& row : scans.back().rows)
      if (!row.agrees) exit_code = kExitMismatch;
  }
  if (c.format == "json") {
    json out = json::array();
    for (const auto& s : scans) out.push_back(scan_json(s));
    w.out() << (out.size() == 1 ? out[0] : out).dump(2) << '\n';
  } else if (c.format == "csv") {
    w.out() << scan_csv_header();
    for (const auto& s : scans) w.out() << scan_csv(s);
  } else {
    for (const auto& s : scans) w.out() << scan_text(s);
  }
  return exit_code;
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--format", c.format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--output", c.output, "append output to this file");
  sub->add_option("--output-dir", c.output_dir, "write one file per run, named by timestamp and config hash");
  sub->add_option("--tol", c.tol, "numeric match tolerance (relative)")
      ->envname("COCG_TOL")
      ->check(CLI::PositiveNumber);
  sub->add_option("--jobs", c.jobs, "worker threads (0 = all cores)");
}

void add_group_params(CLI::App* sub, RunConfig& c) {
  sub->add_option("--family", c.family, "q4n, d2m, qd2n, m2mn or psl2")->required();
  sub->add_option("-m", c.m, "m parameter");
  sub->add_option("-n", c.n, "n parameter");
  sub->add_option("-k", c.k, "field degree for psl2");
  sub->add_option("--dump-graph", c.dump_graph, "write the co-centralizer graph as an edge list");
}

std::string config_key(int argc, char** argv) {
  std::string key;
  for (int i = 1; i < argc; ++i) key += std::string(argv[i]) + '\x1f';
  return key;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra of co-centralizer graphs of finite groups"};
  app.require_subcommand(1, 1);
  RunConfig c;

  auto* group = app.add_subcommand("group", "order, center and centralizer cardinalities");
  add_group_params(group, c);
  add_common(group, c);

  auto* spectrum = app.add_subcommand("spectrum", "exact and numeric spectrum of the co-centralizer graph");
  add_group_params(spectrum, c);
  spectrum->add_option("--kind", c.kind, "D, DL, DQ or all");
  add_common(spectrum, c);

  auto* verify = app.add_subcommand("verify", "compare brute-force spectra with the closed forms");
  verify->add_option("--family", c.family, "q4n, d2m, qd2n, m2mn or psl2");
  verify->add_option("-m", c.m, "m parameter");
  verify->add_option("-n", c.n, "n parameter");
  verify->add_option("-k", c.k, "field degree for psl2");
  verify->add_option("--m-range", c.m_range, "a..b");
  verify->add_option("--n-range", c.n_range, "a..b");
  verify->add_option("--k-range", c.k_range, "a..b");
  verify->add_option("--kind", c.kind, "D, DL, DQ or all");
  verify->add_option("--dump-graph", c.dump_graph, "edge list (single group only)");
  auto* lemma = verify->add_flag("--lemma1", c.lemma1, "check the multipartite distance polynomial");
  verify->add_option("--parts", c.parts, "part sizes, e.g. 5,10,6")->delimiter(',')->needs(lemma);
  add_common(verify, c);

  auto* scan = app.add_subcommand("scan", "integrality scan over a parameter range");
  scan->add_option("--family", c.family, "q4n, d2m, qd2n, m2mn or psl2")->required();
  scan->add_option("--kind", c.kind, "D, DL, DQ or all");
  scan->add_option("--range", c.range, "a..b")->required();
  scan->add_option("-n", c.n, "fixed n for m2mn");
  scan->add_flag("--integral-only", c.integral_only, "omit non-integral rows");
  add_common(scan, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  Writer writer(c, config_key(argc, argv));
  int code = kExitOk;
  try {
    if (group->parsed()) {
      code = cmd_group(c, writer);
    } else if (spectrum->parsed()) {
      code = cmd_spectrum(c, writer);
    } else if (verify->parsed()) {
      if (!c.lemma1 && c.family.empty()) throw InvalidParameter("verify needs --family or --lemma1");
      code = cmd_verify(c, writer);
    } else {
      code = cmd_scan(c, writer);
    }
  } catch (const InvalidParameter& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  writer.flush();
  return code;
}
