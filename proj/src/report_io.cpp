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

#include "cocg/report_io.hpp"

#include <iomanip>
#include <sstream>

namespace cocg {

using nlohmann::json;

namespace {

json poly_json(const BigPoly& poly) {
  json out = json::array();
  for (const auto& c : poly.coefficients()) out.push_back(c.get_str());
  return out;
}

json entry_json(const SpectrumEntry& entry) {
  json out;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, BigInt>) {
          out = {{"value_kind", "int"}, {"p", v.get_str()}, {"d", "0"}, {"q", "1"}};
        } else if constexpr (std::is_same_v<T, SurdValue>) {
          out = {{"value_kind", "surd"}, {"p", v.p().get_str()}, {"d", v.d().get_str()}, {"q", v.q().get_str()}};
        } else {
          out = {{"value_kind", "poly"}, {"p", "0"}, {"d", "0"}, {"q", "1"}, {"poly", poly_json(v.poly)}};
        }
      },
      entry.value);
  out["mult"] = entry.multiplicity;
  return out;
}

std::string join(const std::vector<std::string>& items, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += sep;
    out += items[i];
  }
  return out;
}

std::string params_text(const GroupSpec& spec) {
  std::string label = spec.label();
  const auto open = label.find('(');
  return open == std::string::npos ? label : label.substr(open + 1, label.size() - open - 2);
}

std::string found_text(const VerificationReport& report) {
  if (!report.found_parts) return "-";
  std::string out = "K_{";
  for (std::size_t i = 0; i < report.found_parts->parts.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(report.found_parts->parts[i]);
  }
  return out + "}";
}

std::string residual_text(double r) {
  if (r < 0) return "";
  std::ostringstream out;
  out << std::setprecision(3) << r;
  return out.str();
}

}  // namespace

json spectrum_json(const SpectrumSpec& spectrum) {
  json out = json::array();
  for (const auto& e : spectrum.entries) out.push_back(entry_json(e));
  return out;
}

json params_json(const GroupSpec& spec) {
  switch (spec.family()) {
    case Family::Q4N:
    case Family::QD2N: return {{"n", spec.n()}};
    case Family::D2M: return {{"m", spec.m()}};
    case Family::M2MN: return {{"m", spec.m()}, {"n", spec.n()}};
    case Family::PSL2: return {{"k", spec.k()}};
  }
  return json::object();
}

json report_json(const VerificationReport& report) {
  json out;
  out["family"] = std::string(family_name(report.spec.family()));
  out["params"] = params_json(report.spec);
  out["kind"] = std::string(kind_name(report.kind));
  out["outcome"] = std::string(outcome_name(report.outcome));
  out["detail"] = report.detail;
  json found = nullptr;
  if (report.found_parts) found = report.found_parts->parts;
  out["shape"] = {{"claimed", to_string(report.claimed_shape)}, {"found", found}};
  out["exact_path"] = report.exact_path;
  out["charpoly"] = report.charpoly ? poly_json(*report.charpoly) : json(nullptr);
  out["spectrum"] = report.claimed ? spectrum_json(*report.claimed) : json(nullptr);
  out["computed_spectrum"] = report.computed ? spectrum_json(*report.computed) : json(nullptr);
  out["numeric_residual"] = report.numeric_residual < 0 ? json(nullptr) : json(report.numeric_residual);
  json variants = json::array();
  for (const auto& v : report.variants) {
    variants.push_back({{"variant", std::string(variant_name(v.variant))},
                        {"outcome", std::string(outcome_name(v.outcome))},
                        {"detail", v.detail}});
  }
  out["variants"] = variants;
  json nullities = json::array();
  for (const auto& c : report.nullity_checks) {
    nullities.push_back({{"value", c.value.get_str()}, {"claimed", c.claimed}, {"computed", c.computed}});
  }
  out["nullity_checks"] = nullities;
  out["notes"] = report.notes;
  return out;
}

std::string validate_report_json(const json& r) {
  if (!r.is_object()) return "report is not an object";
  for (const char* key : {"family", "kind", "outcome", "detail", "exact_path"}) {
    if (!r.contains(key) || !r[key].is_string()) return std::string(key) + " must be a string";
  }
  if (!parse_family(r["family"].get<std::string>())) return "unknown family";
  if (!parse_kind(r["kind"].get<std::string>())) return "unknown kind";
  const auto outcome = r["outcome"].get<std::string>();
  if (outcome != "ExactMatch" && outcome != "Mismatch" && outcome != "Degenerate") return "unknown outcome";
  if (!r.contains("params") || !r["params"].is_object()) return "params must be an object";
  for (const auto& [key, value] : r["params"].items()) {
    if ((key != "m" && key != "n" && key != "k") || !value.is_number_integer()) return "bad parameter " + key;
  }
  auto string_array = [](const json& v) {
    if (!v.is_array()) return false;
    for (const auto& x : v)
      if (!x.is_string()) return false;
    return true;
  };
  if (!r.contains("charpoly") || !(r["charpoly"].is_null() || string_array(r["charpoly"])))
    return "charpoly must be null or an array of strings";
  for (const char* key : {"spectrum", "computed_spectrum"}) {
    if (!r.contains(key)) return std::string(key) + " missing";
    const auto& s = r[key];
    if (s.is_null()) continue;
    if (!s.is_array()) return std::string(key) + " must be null or an array";
    for (const auto& e : s) {
      if (!e.is_object()) return "spectrum entry must be an object";
      if (!e.contains("value_kind") || !e["value_kind"].is_string()) return "value_kind missing";
      const auto vk = e["value_kind"].get<std::string>();
      if (vk != "int" && vk != "surd" && vk != "poly") return "unknown value_kind " + vk;
      for (const char* f : {"p", "d", "q"})
        if (!e.contains(f) || !e[f].is_string()) return std::string("entry field ") + f + " must be a string";
      if (!e.contains("mult") || !e["mult"].is_number_unsigned()) return "mult must be a non-negative integer";
      if (vk == "poly" && (!e.contains("poly") || !string_array(e["poly"]))) return "poly entry needs coefficients";
    }
  }
  if (!r.contains("numeric_residual") || !(r["numeric_residual"].is_null() || r["numeric_residual"].is_number()))
    return "numeric_residual must be null or a number";
  if (!r.contains("notes") || !string_array(r["notes"])) return "notes must be an array of strings";
  if (!r.contains("variants") || !r["variants"].is_array()) return "variants must be an array";
  return {};
}

json scan_json(const ScanResult& scan) {
  json rows = json::array();
  for (const auto& row : scan.rows) {
    rows.push_back({{"parameter", row.parameter},
                    {"degenerate", row.degenerate},
                    {"integral", row.integral},
                    {"witness", row.witness},
                    {"cross_checked", row.cross_checked},
                    {"exact_integral", row.exact_integral ? json(*row.exact_integral) : json(nullptr)},
                    {"agrees", row.agrees}});
  }
  return {{"family", std::string(family_name(scan.family))},
          {"kind", std::string(kind_name(scan.kind))},
          {"condition", scan.condition},
          {"rows", rows}};
}

std::string csv_field(const std::string& text) {
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string out = "\"";
  for (const char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string report_csv_header() {
  return "family,params,kind,outcome,shape,exact_path,charpoly,spectrum,numeric_residual,detail,notes\n";
}

std::string report_csv_row(const VerificationReport& r) {
  std::vector<std::string> fields{
      std::string(family_name(r.spec.family())),
      params_text(r.spec),
      std::string(kind_name(r.kind)),
      std::string(outcome_name(r.outcome)),
      found_text(r),
      r.exact_path,
      r.charpoly ? r.charpoly->to_string() : "",
      r.claimed ? r.claimed->to_string() : "",
      residual_text(r.numeric_residual),
      r.detail,
      join(r.notes, "; "),
  };
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

std::string scan_csv_header() {
  return "family,kind,parameter,degenerate,integral,witness,cross_checked,exact_integral,agrees\n";
}

std::string scan_csv(const ScanResult& scan) {
  std::ostringstream out;
  const auto family = family_name(scan.family);
  const auto kind = kind_name(scan.kind);
  for (const auto& row : scan.rows) {
    out << family << ',' << kind << ',' << row.parameter << ',' << row.degenerate << ',' << row.integral << ','
        << csv_field(row.witness) << ',' << row.cross_checked << ','
        << (row.exact_integral ? (*row.exact_integral ? "1" : "0") : "") << ',' << row.agrees << '\n';
  }
  return out.str();
}

std::string report_text(const VerificationReport& r) {
  std::ostringstream out;
  out << r.spec.label() << "  " << kind_name(r.kind) << "  " << outcome_name(r.outcome) << '\n';
  out << "  shape     claimed " << to_string(r.claimed_shape) << ", found " << found_text(r) << '\n';
  if (r.charpoly) out << "  charpoly  " << r.charpoly->to_string() << '\n';
  if (r.claimed) out << "  claimed   " << r.claimed->to_string() << '\n';
  if (r.computed) out << "  computed  " << r.computed->to_string() << '\n';
  for (const auto& c : r.nullity_checks) {
    out << "  nullity   " << c.value.get_str() << ": " << c.computed << " (claimed " << c.claimed << ")\n";
  }
  if (r.numeric_residual >= 0) out << "  residual  " << residual_text(r.numeric_residual) << '\n';
  if (!r.detail.empty()) out << "  detail    " << r.detail << '\n';
  for (const auto& n : r.notes) out << "  note      " << n << '\n';
  return out.str();
}

std::string scan_text(const ScanResult& scan) {
  std::ostringstream out;
  out << family_name(scan.family) << ' ' << kind_name(scan.kind);
  if (!scan.condition.empty()) out << "  condition: " << scan.condition;
  out << '\n' << std::left << std::setw(10) << "param" << std::setw(10) << "integral" << std::setw(10) << "exact"
      << "witness\n";
  for (const auto& row : scan.rows) {
    const char* verdict = row.degenerate ? "degen" : (row.integral ? "yes" : "no");
    const char* exact = row.exact_integral ? (*row.exact_integral ? "yes" : "no") : "-";
    out << std::setw(10) << row.parameter << std::setw(10) << verdict << std::setw(10) << exact << row.witness;
    if (!row.agrees) out << "  DISAGREES";
    out << '\n';
  }
  out << scan.rows.size() << " row(s)\n";
  return out.str();
}

}  // namespace cocg
