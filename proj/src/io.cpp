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

#include "genent/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace genent {

namespace {

using nlohmann::json;

double require_finite(double v, const char* field) {
  if (!std::isfinite(v)) {
    std::ostringstream msg;
    msg << "report invariant violated: field " << field << " is not finite";
    throw invariant_error(msg.str());
  }
  return v;
}

void append_json_string(std::string& out, const std::string& s) {
  // Report/state labels are plain text; escape the JSON specials and
  // control characters.
  out += '"';
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof(buf), "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  out += '"';
}

std::string dims_json(const std::vector<Index>& dims) {
  std::string out = "[";
  for (std::size_t j = 0; j < dims.size(); ++j) {
    if (j) out += ", ";
    out += std::to_string(dims[j]);
  }
  out += "]";
  return out;
}

}  // namespace

std::string format_double17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

StateFile parse_state_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw file_format_error(std::string("state file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw file_format_error("state file: top level must be an object");
  if (!j.contains("dims") || !j["dims"].is_array())
    throw file_format_error("state file: missing \"dims\" array");
  if (!j.contains("amplitudes") || !j["amplitudes"].is_array())
    throw file_format_error("state file: missing \"amplitudes\" array");

  StateFile f;
  for (const json& d : j["dims"]) {
    if (!d.is_number_integer())
      throw file_format_error("state file: dims entries must be integers");
    f.dims.push_back(d.get<Index>());
  }
  for (const json& pair : j["amplitudes"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      throw file_format_error("state file: amplitudes entries must be [re, im] pairs");
    f.amplitudes.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw file_format_error("state file: label must be a string");
    f.label = j["label"].get<std::string>();
  }
  return f;
}

StateFile read_state_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw file_format_error("cannot open state file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_state_json(buf.str());
}

std::string state_file_to_json(const StateFile& f) {
  std::string out = "{\n  \"dims\": " + dims_json(f.dims);
  if (!f.label.empty()) {
    out += ",\n  \"label\": ";
    append_json_string(out, f.label);
  }
  out += ",\n  \"amplitudes\": [\n";
  for (std::size_t i = 0; i < f.amplitudes.size(); ++i) {
    out += "    [" + format_double17(f.amplitudes[i].real()) + ", " +
           format_double17(f.amplitudes[i].imag()) + "]";
    if (i + 1 < f.amplitudes.size()) out += ",";
    out += "\n";
  }
  out += "  ]\n}\n";
  return out;
}

void write_state_file(const std::string& path, const StateFile& f) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw file_format_error("cannot write state file: " + path);
  out << state_file_to_json(f);
}

MultipartiteState ingest_state(const StateFile& f, std::optional<double>* renorm_defect) {
  Vector amp(static_cast<Index>(f.amplitudes.size()));
  for (std::size_t i = 0; i < f.amplitudes.size(); ++i)
    amp(static_cast<Index>(i)) = f.amplitudes[i];

  const double defect = std::abs(amp.squaredNorm() - 1.0);
  if (defect <= kNormTol) return MultipartiteState(f.dims, std::move(amp));
  if (defect <= kIngestNormTol) {
    if (renorm_defect) *renorm_defect = defect;
    return MultipartiteState::renormalized(f.dims, std::move(amp));
  }
  std::ostringstream msg;
  msg << "state norm invariant violated on ingestion: | ||psi||^2 - 1 | = " << defect
      << " exceeds " << kIngestNormTol;
  throw invariant_error(msg.str());
}

std::string report_to_json(const ReportFile& r) {
  std::string out = "{\n";
  if (!r.label.empty()) {
    out += "  \"label\": ";
    append_json_string(out, r.label);
    out += ",\n";
  }
  out += "  \"dims\": " + dims_json(r.dims) + ",\n";
  out += "  \"per_subsystem\": [\n";
  for (std::size_t j = 0; j < r.report.per_subsystem.size(); ++j) {
    const SubsystemEntanglement& e = r.report.per_subsystem[j];
    out += "    {\"subsystem\": " + std::to_string(e.subsystem);
    out += ", \"epsilon_raw\": " + format_double17(require_finite(e.epsilon_raw, "epsilon_raw"));
    out += ", \"epsilon_normalized\": " +
           format_double17(require_finite(e.epsilon_normalized, "epsilon_normalized"));
    out += ", \"expectation_norm_sq\": " +
           format_double17(require_finite(e.expectation_norm_sq, "expectation_norm_sq"));
    out += "}";
    if (j + 1 < r.report.per_subsystem.size()) out += ",";
    out += "\n";
  }
  out += "  ],\n";
  out += "  \"ge_raw\": " + format_double17(require_finite(r.report.ge_raw, "ge_raw")) + ",\n";
  out += "  \"ge_normalized\": " +
         format_double17(require_finite(r.report.ge_normalized, "ge_normalized")) + ",\n";
  out += "  \"ge_via_purity\": " +
         format_double17(require_finite(r.report.ge_via_purity, "ge_via_purity")) + ",\n";
  out += "  \"agreement_defect\": " +
         format_double17(require_finite(r.report.agreement_defect, "agreement_defect")) + ",\n";
  if (r.report.genuine)
    out += "  \"genuine\": " + format_double17(require_finite(*r.report.genuine, "genuine")) +
           ",\n";
  if (r.renormalized_norm_defect)
    out += "  \"renormalized_input_norm_defect\": " +
           format_double17(require_finite(*r.renormalized_norm_defect, "renormalized")) + ",\n";
  if (r.seed) out += "  \"seed\": " + std::to_string(*r.seed) + ",\n";
  out += "  \"version\": ";
  append_json_string(out, r.version);
  out += "\n}\n";
  return out;
}

void write_report_file(const std::string& path, const ReportFile& r) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw file_format_error("cannot write report file: " + path);
  out << report_to_json(r);
}

}  // namespace genent
