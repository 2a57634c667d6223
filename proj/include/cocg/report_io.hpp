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

#include <string>
#include <vector>

#include "json.hpp"

#include "cocg/spectrum.hpp"
#include "cocg/verification.hpp"

namespace cocg {

// Report JSON. Exact integers (coefficients, p, d, q) are decimal strings so
// they survive any size; multiplicities and residuals are JSON numbers.
//
// {
//   "family": "q4n", "params": {"n": 3}, "kind": "D",
//   "outcome": "ExactMatch" | "Mismatch" | "Degenerate", "detail": "...",
//   "shape": {"claimed": "K_{1,3}", "found": [3, 1] | null},
//   "exact_path": "charpoly" | "nullity" | "none",
//   "charpoly": ["-520", "264", "-36", "1"] | null,      (constant term first)
//   "spectrum": [entry...] | null,                       (claimed)
//   "computed_spectrum": [entry...] | null,
//   "numeric_residual": 1.2e-15 | null,
//   "variants": [{"variant": "ProofBlocks", "outcome": "...", "detail": "..."}],
//   "notes": ["..."]
// }
// entry: {"value_kind": "int" | "surd" | "poly", "p", "d", "q", "mult",
//         "poly": [...] (poly entries only)}.  An int v is p=v, d=0, q=1;
// a poly entry has p=d=0, q=1 and lists its coefficients.
nlohmann::json spectrum_json(const SpectrumSpec& spectrum);
nlohmann::json report_json(const VerificationReport& report);
nlohmann::json params_json(const GroupSpec& spec);

/// Structural check of a report object against the schema above. Returns the
/// first violation, or an empty string.
std::string validate_report_json(const nlohmann::json& report);

nlohmann::json scan_json(const ScanResult& scan);

// CSV, one row per report:
//   family,params,kind,outcome,shape,exact_path,charpoly,spectrum,numeric_residual,detail,notes
// charpoly and spectrum use the text renderings; notes are joined with "; ".
std::string report_csv_header();
std::string report_csv_row(const VerificationReport& report);

// CSV, one row per scanned parameter:
//   family,kind,parameter,degenerate,integral,witness,cross_checked,exact_integral,agrees
std::string scan_csv_header();
std::string scan_csv(const ScanResult& scan);

std::string report_text(const VerificationReport& report);
std::string scan_text(const ScanResult& scan);

/// RFC 4180 quoting when the field needs it.
std::string csv_field(const std::string& text);

}  // namespace cocg
