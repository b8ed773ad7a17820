// Copyright 2026 The genent developers.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "genent/common.hpp"
#include "genent/errors.hpp"
#include "genent/measure.hpp"
#include "genent/state.hpp"

namespace genent {

/// The file does not parse or does not match the schema (missing field,
/// wrong type). Distinct from invariant violations of well-formed content.
class file_format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// On-disk state: {"dims": [...], "amplitudes": [[re, im], ...],
/// "label": "..."} with label optional. Floating-point values are written
/// with 17 significant digits, so amplitudes round-trip exactly.
struct StateFile {
  std::vector<Index> dims;
  std::vector<cplx> amplitudes;
  std::string label;  // empty = absent
};

/// On-disk report: echoes label/dims, carries the full GEReport, plus tool
/// version and, when applicable, the generator seed and a renormalization
/// warning (input norm defect above 1e-10 but within the 1e-8 ingestion
/// tolerance).
struct ReportFile {
  std::string label;
  std::vector<Index> dims;
  GEReport report;
  std::optional<double> renormalized_norm_defect;
  std::optional<std::uint64_t> seed;
  std::string version;
};

/// %.17g rendering used for every floating-point value we serialize.
std::string format_double17(double v);

StateFile parse_state_json(const std::string& text);
StateFile read_state_file(const std::string& path);

std::string state_file_to_json(const StateFile& f);
void write_state_file(const std::string& path, const StateFile& f);

/// Builds the state under the ingestion norm policy: defect <= 1e-10
/// constructs directly, defect <= 1e-8 renormalizes and reports the defect
/// through `renorm_defect`, anything larger is an invariant violation.
MultipartiteState ingest_state(const StateFile& f,
                               std::optional<double>* renorm_defect = nullptr);

std::string report_to_json(const ReportFile& r);
void write_report_file(const std::string& path, const ReportFile& r);

}  // namespace genent
