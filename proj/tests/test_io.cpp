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

#include <cmath>
#include <cstring>

#include <doctest.h>
#include <json.hpp>

#include "genent/io.hpp"
#include "genent/rng.hpp"
#include "genent/states.hpp"
#include "genent/version.hpp"

using namespace genent;

namespace {

StateFile to_state_file(const MultipartiteState& st, std::string label) {
  StateFile f;
  f.dims = st.dims();
  f.amplitudes.assign(st.amplitudes().data(), st.amplitudes().data() + st.total_dim());
  f.label = std::move(label);
  return f;
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

}  // namespace

TEST_CASE("state files round-trip bit exactly") {
  const MultipartiteState st = random_pure_state({2, 3, 2}, 20260809);
  const StateFile out = to_state_file(st, "sample");
  const StateFile in = parse_state_json(state_file_to_json(out));

  CHECK(in.dims == out.dims);
  CHECK(in.label == "sample");
  REQUIRE(in.amplitudes.size() == out.amplitudes.size());
  for (std::size_t i = 0; i < in.amplitudes.size(); ++i) {
    CHECK(same_bits(in.amplitudes[i].real(), out.amplitudes[i].real()));
    CHECK(same_bits(in.amplitudes[i].imag(), out.amplitudes[i].imag()));
  }
}

TEST_CASE("format_double17 round-trips doubles") {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const double v = rng.gaussian();
    CHECK(same_bits(std::stod(format_double17(v)), v));
  }
  CHECK(format_double17(0.5) == "0.5");
}

TEST_CASE("ingestion norm policy") {
  SUBCASE("clean input is not touched") {
    const MultipartiteState st = random_pure_state({2, 2}, 1);
    std::optional<double> warn;
    const MultipartiteState back = ingest_state(to_state_file(st, ""), &warn);
    CHECK_FALSE(warn.has_value());
    CHECK((back.amplitudes() - st.amplitudes()).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("small defects renormalize with a warning") {
    StateFile f = to_state_file(bell_state(), "bell");
    for (auto& a : f.amplitudes) a *= 1.0 + 1e-9;  // norm^2 defect ~2e-9
    std::optional<double> warn;
    const MultipartiteState back = ingest_state(f, &warn);
    REQUIRE(warn.has_value());
    CHECK(*warn > 1e-10);
    CHECK(std::abs(back.amplitudes().squaredNorm() - 1.0) < 1e-12);
  }

  SUBCASE("large defects are invariant violations") {
    StateFile f = to_state_file(bell_state(), "bell");
    for (auto& a : f.amplitudes) a *= 1.01;
    CHECK_THROWS_AS(ingest_state(f, nullptr), invariant_error);
  }

  SUBCASE("count mismatch is an invariant violation") {
    StateFile f = to_state_file(bell_state(), "");
    f.amplitudes.pop_back();
    CHECK_THROWS_AS(ingest_state(f, nullptr), invariant_error);
  }
}

TEST_CASE("malformed state files raise format errors") {
  CHECK_THROWS_AS(parse_state_json("not json at all"), file_format_error);
  CHECK_THROWS_AS(parse_state_json("[1, 2, 3]"), file_format_error);
  CHECK_THROWS_AS(parse_state_json("{\"dims\": [2, 2]}"), file_format_error);
  CHECK_THROWS_AS(parse_state_json("{\"dims\": [2], \"amplitudes\": [1, 0]}"),
                  file_format_error);
  CHECK_THROWS_AS(
      parse_state_json("{\"dims\": [2], \"amplitudes\": [[0, 0], [1, 0]], \"label\": 5}"),
      file_format_error);
}

TEST_CASE("report serialization carries the measure and metadata") {
  ReportFile r;
  r.label = "w";
  r.dims = {2, 2, 2};
  r.report = general_entanglement(w_state(3));
  r.report.genuine = genuine_entanglement(w_state(3));
  r.seed = 99;
  r.version = kVersion;

  const std::string text = report_to_json(r);
  const nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j.at("label") == "w");
  CHECK(j.at("dims").size() == 3);
  CHECK(j.at("per_subsystem").size() == 3);
  CHECK(std::abs(j.at("ge_normalized").get<double>() - 8.0 / 9.0) < 1e-12);
  CHECK(std::abs(j.at("genuine").get<double>() - 20.0 / 27.0) < 1e-12);
  CHECK(j.at("seed") == 99);
  CHECK(j.at("version") == kVersion);
  CHECK_FALSE(j.contains("renormalized_input_norm_defect"));

  // Identical input serializes to identical bytes.
  CHECK(report_to_json(r) == text);
}
