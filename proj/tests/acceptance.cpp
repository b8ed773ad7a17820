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
//
// End-to-end acceptance suite: golden values, property sweeps at their
// stated tolerances, and the CLI round trip. Prints one PASS/FAIL line per
// criterion; exit status is the number of failures. argv[1] must point at
// the CLI binary.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "genent/io.hpp"
#include "genent/measure.hpp"
#include "genent/oracle.hpp"
#include "genent/rng.hpp"
#include "genent/spin.hpp"
#include "genent/states.hpp"
#include "genent/verify.hpp"

using namespace genent;

namespace {

std::string g_cli_path;

struct Failure {
  std::string detail;
};

void require(bool ok, const std::string& detail) {
  if (!ok) throw Failure{detail};
}

std::string num(double v) { return format_double17(v); }

// ---------------------------------------------------------------------------
// 1. Golden values
// ---------------------------------------------------------------------------

void golden_values() {
  const double tol = 1e-9;

  const GEReport bell = general_entanglement(bell_state());
  require(std::abs(bell.ge_normalized - 1.0) < tol, "bell ge = " + num(bell.ge_normalized));
  const double c = concurrence_two_qubit(bell_state());
  require(std::abs(c * c - 1.0) < tol, "bell concurrence^2 = " + num(c * c));

  const double ghz = general_entanglement(ghz_state(3)).ge_normalized;
  require(std::abs(ghz - 1.0) < tol, "ghz ge = " + num(ghz));

  const double w = general_entanglement(w_state(3)).ge_normalized;
  require(std::abs(w - 8.0 / 9.0) < tol, "w ge = " + num(w));

  Vector qq = Vector::Zero(6);
  qq(0) = qq(4) = 1.0 / std::sqrt(2.0);  // (|00> + |11>)/sqrt(2) on 2 x 3
  const double mixed_pair =
      general_entanglement(MultipartiteState({2, 3}, qq)).ge_normalized;
  require(std::abs(mixed_pair - 0.875) < tol, "qubit x qutrit ge = " + num(mixed_pair));

  const double qutrits = general_entanglement(ghz_state(2, 3)).ge_normalized;
  require(std::abs(qutrits - 1.0) < tol, "qutrit pair ge = " + num(qutrits));

  const std::vector<std::vector<Index>> families = {{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {2, 3, 2}};
  for (std::uint64_t s = 0; s < 10; ++s) {
    const double ge =
        general_entanglement(random_product_state(families[s % families.size()], mix_seed(41, s)))
            .ge_normalized;
    require(std::abs(ge) < tol, "product state ge = " + num(ge));
  }
}

// ---------------------------------------------------------------------------
// 2. Basis completeness identity, D in {2,3,4,5}, 100 matrices each
// ---------------------------------------------------------------------------

void lemma_identity() {
  const SuiteResult result = run_lemma_suite(400, 20260809);
  require(result.passed() && result.max_defect < 1e-9,
          "failures " + std::to_string(result.failures) + ", max defect " +
              num(result.max_defect));
}

// ---------------------------------------------------------------------------
// 3. Spin-1 basis reproduction
// ---------------------------------------------------------------------------

void spin1_basis() {
  const HermitianBasis built = gram_schmidt_orthonormalize(spin1_candidate_set());
  const HermitianBasis reference = spin1_reference_basis();
  require(built.ops.size() == 8, "expected 8 operators");
  double max_dev = 0.0;
  for (std::size_t k = 0; k < 8; ++k)
    max_dev = std::max(max_dev, (built.ops[k] - reference.ops[k]).cwiseAbs().maxCoeff());
  require(max_dev < 1e-10, "max entrywise deviation " + num(max_dev));
}

// ---------------------------------------------------------------------------
// 4. Expectation-value route vs purity route on 200 random states
// ---------------------------------------------------------------------------

void form_agreement() {
  const std::vector<std::vector<Index>> families = {{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {2, 3, 2}};
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 200; ++s) {
    const GEReport report =
        general_entanglement(random_pure_state(families[s % families.size()], mix_seed(4242, s)));
    worst = std::max(worst, report.agreement_defect);
  }
  require(worst < 1e-9, "max agreement defect " + num(worst));
}

// ---------------------------------------------------------------------------
// 5. Local-unitary invariance, 100 pairs
// ---------------------------------------------------------------------------

void lu_invariance() {
  const SuiteResult result = run_lu_invariance_suite(100, 555);
  require(result.passed() && result.max_defect < 1e-9,
          "failures " + std::to_string(result.failures) + ", max defect " +
              num(result.max_defect));
}

// ---------------------------------------------------------------------------
// 6. Measurement independence: 20 states x all subsystems x 20 measurements
// ---------------------------------------------------------------------------

void measurement_independence() {
  const SuiteResult result = run_measurement_independence_suite(20, 20, 99);
  require(result.passed() && result.max_defect < 1e-8,
          "failures " + std::to_string(result.failures) + ", max defect " +
              num(result.max_defect));
}

// ---------------------------------------------------------------------------
// 7. Monte-Carlo dominance and 2% convergence at 10^4 samples, 20 cases
// ---------------------------------------------------------------------------

void montecarlo_dominance() {
  const SuiteResult result = run_oracle_max_suite(20, 10000, 1234);
  require(result.passed(), "failures " + std::to_string(result.failures) + ", worst gap " +
                               num(result.max_defect));
}

// ---------------------------------------------------------------------------
// 8. One-round LOCC sweep, 200 trials, zero violations
// ---------------------------------------------------------------------------

void locc_monotonicity() {
  const SuiteResult result = run_locc_suite(200, 31337);
  require(result.passed(), "violations " + std::to_string(result.failures) +
                               ", worst excess " + num(result.max_defect));
}

// ---------------------------------------------------------------------------
// 9. Genuine N-partite variant
// ---------------------------------------------------------------------------

MultipartiteState random_biseparable(const std::vector<Index>& dims, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = dims.size();
  // Random nonempty proper block.
  std::vector<std::size_t> block, rest;
  while (block.empty() || rest.empty()) {
    block.clear();
    rest.clear();
    for (std::size_t j = 0; j < n; ++j)
      (rng.below(2) ? block : rest).push_back(j);
  }
  std::vector<Index> block_dims, rest_dims;
  for (std::size_t j : block) block_dims.push_back(dims[j]);
  for (std::size_t j : rest) rest_dims.push_back(dims[j]);

  auto factor = [&](const std::vector<Index>& d, std::uint64_t s) {
    Index total = 1;
    for (Index x : d) total *= x;
    Rng local(s);
    return MultipartiteState::renormalized(d, local.complex_gaussian_vector(total));
  };
  const MultipartiteState merged =
      tensor_product(factor(block_dims, mix_seed(seed, 1)), factor(rest_dims, mix_seed(seed, 2)));

  // Undo the regrouping so the factors land on their original positions.
  std::vector<std::size_t> order = block;
  order.insert(order.end(), rest.begin(), rest.end());
  std::vector<std::size_t> inverse(n);
  for (std::size_t k = 0; k < n; ++k) inverse[order[k]] = k;
  std::vector<std::size_t> perm(n);
  for (std::size_t q = 0; q < n; ++q) perm[q] = inverse[q];
  return permute_subsystems(merged, perm);
}

void genuine_npartite() {
  const std::vector<std::vector<Index>> families = {{2, 2, 2}, {2, 3, 2}, {2, 2, 2, 2}};
  for (std::uint64_t s = 0; s < 20; ++s) {
    const MultipartiteState st =
        random_biseparable(families[s % families.size()], mix_seed(9000, s));
    const double genuine = genuine_entanglement(st);
    require(std::abs(genuine) < 1e-10, "biseparable state gave " + num(genuine));
  }

  const double ghz_genuine = genuine_entanglement(ghz_state(3));
  require(ghz_genuine > 0.1, "ghz genuine = " + num(ghz_genuine));
  require(std::abs(ghz_genuine - 5.0 / 6.0) < 1e-9, "ghz genuine = " + num(ghz_genuine));
  const double w_genuine = genuine_entanglement(w_state(3));
  require(w_genuine > 0.1, "w genuine = " + num(w_genuine));

  const std::vector<std::vector<Index>> sample = {{2, 2, 2}, {2, 3, 2}};
  for (std::uint64_t s = 0; s < 20; ++s) {
    const MultipartiteState st = random_pure_state(sample[s % 2], mix_seed(9100, s));
    require(genuine_entanglement(st) <= general_entanglement(st).ge_normalized + 1e-10,
            "genuine exceeded the plain measure");
  }
}

// ---------------------------------------------------------------------------
// 10. Qubit specializations
// ---------------------------------------------------------------------------

void qubit_specialization() {
  for (std::uint64_t s = 0; s < 100; ++s) {
    const std::size_t n = 2 + s % 5;  // 2..6 qubits
    const MultipartiteState st = random_pure_state(std::vector<Index>(n, 2), mix_seed(1600, s));
    const double defect = std::abs(meyer_wallach(st) - general_entanglement(st).ge_normalized);
    require(defect < 1e-10, "meyer-wallach defect " + num(defect));
  }
  for (std::uint64_t s = 0; s < 100; ++s) {
    const MultipartiteState st = random_pure_state({2, 2}, mix_seed(1700, s));
    const double c = concurrence_two_qubit(st);
    const double defect = std::abs(general_entanglement(st).ge_normalized - c * c);
    require(defect < 1e-9, "concurrence defect " + num(defect));
  }
}

// ---------------------------------------------------------------------------
// 11. CLI round trip and determinism
// ---------------------------------------------------------------------------

struct CliResult {
  int exit_code;
  std::string output;
};

CliResult run_cli(const std::string& args, const std::filesystem::path& capture) {
  const std::string command = g_cli_path + " " + args + " > " + capture.string() + " 2>&1";
  const int raw = std::system(command.c_str());
  CliResult result;
  result.exit_code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  std::ifstream in(capture);
  std::ostringstream buf;
  buf << in.rdbuf();
  result.output = buf.str();
  return result;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof(double)) == 0; }

void require_same_numeric_fields(const std::string& a_text, const std::string& b_text) {
  const nlohmann::json a = nlohmann::json::parse(a_text);
  const nlohmann::json b = nlohmann::json::parse(b_text);
  for (const char* field : {"ge_raw", "ge_normalized", "ge_via_purity", "agreement_defect"})
    require(same_bits(a.at(field).get<double>(), b.at(field).get<double>()),
            std::string("field ") + field + " differs between the two routes");
  require(a.at("per_subsystem").size() == b.at("per_subsystem").size(),
          "per_subsystem size differs");
  for (std::size_t j = 0; j < a.at("per_subsystem").size(); ++j)
    for (const char* field : {"epsilon_raw", "epsilon_normalized", "expectation_norm_sq"})
      require(same_bits(a.at("per_subsystem")[j].at(field).get<double>(),
                        b.at("per_subsystem")[j].at(field).get<double>()),
              std::string("per-subsystem field ") + field + " differs");
  require(a.contains("genuine") == b.contains("genuine"), "genuine presence differs");
  if (a.contains("genuine"))
    require(same_bits(a.at("genuine").get<double>(), b.at("genuine").get<double>()),
            "genuine differs");
}

void cli_round_trip() {
  require(!g_cli_path.empty(), "CLI binary path missing (pass it as argv[1])");
  const std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "genent-acceptance";
  std::filesystem::create_directories(dir);
  const auto scratch = dir / "cli.log";

  // File route vs in-memory route on a random state, fixed seed.
  const auto state_path = (dir / "state.json").string();
  CliResult r = run_cli("generate random --dims 2,3,2 --seed 42 --out " + state_path, scratch);
  require(r.exit_code == 0, "generate failed: " + r.output);

  const auto report_a = (dir / "report_file_route.json").string();
  r = run_cli("compute " + state_path + " --genuine --out " + report_a, scratch);
  require(r.exit_code == 0, "compute from file failed: " + r.output);

  const auto report_b = (dir / "report_gen_route.json").string();
  r = run_cli("compute --gen random --dims 2,3,2 --seed 42 --genuine --out " + report_b, scratch);
  require(r.exit_code == 0, "compute from generator failed: " + r.output);

  require_same_numeric_fields(slurp(report_a), slurp(report_b));

  // Re-running the full command reproduces the file byte for byte.
  const auto report_c = (dir / "report_repeat.json").string();
  r = run_cli("compute " + state_path + " --genuine --out " + report_c, scratch);
  require(r.exit_code == 0, "repeat compute failed");
  require(slurp(report_a) == slurp(report_c), "repeated run is not byte-identical");

  // Golden values through the CLI, --quiet emits just the number.
  r = run_cli("compute --gen bell --quiet", scratch);
  require(r.exit_code == 0, "bell compute failed");
  require(std::abs(std::stod(r.output) - 1.0) < 1e-9, "bell via CLI gave " + r.output);

  r = run_cli("compute --gen product --dims 2,3,2 --quiet", scratch);
  require(r.exit_code == 0, "product compute failed");
  require(std::abs(std::stod(r.output)) < 1e-9, "product via CLI gave " + r.output);

  const auto w_report = (dir / "w.json").string();
  r = run_cli("compute --gen w --n 3 --genuine --out " + w_report, scratch);
  require(r.exit_code == 0, "w compute failed");
  {
    const nlohmann::json j = nlohmann::json::parse(slurp(w_report));
    require(std::abs(j.at("ge_normalized").get<double>() - 8.0 / 9.0) < 1e-9,
            "w ge via CLI differs from 8/9");
    require(j.at("genuine").get<double>() > 0.1, "w genuine via CLI not positive");
  }

  // Generated bell file carries the expected amplitudes.
  const auto bell_path = (dir / "bell.json").string();
  r = run_cli("generate bell --out " + bell_path, scratch);
  require(r.exit_code == 0, "generate bell failed");
  {
    const StateFile f = read_state_file(bell_path);
    require(f.dims == std::vector<Index>({2, 2}), "bell dims wrong");
    require(std::abs(f.amplitudes[0].real() - 1.0 / std::sqrt(2.0)) < 1e-15 &&
                std::abs(f.amplitudes[3].real() - 1.0 / std::sqrt(2.0)) < 1e-15 &&
                std::abs(f.amplitudes[1]) < 1e-15 && std::abs(f.amplitudes[2]) < 1e-15,
            "bell amplitudes wrong");
  }

  // Exit-code contract: malformed file -> 2, invariant violation -> 3,
  // dimension guard -> 4.
  const auto bad_json = dir / "broken.json";
  std::ofstream(bad_json) << "{ not json";
  r = run_cli("compute " + bad_json.string(), scratch);
  require(r.exit_code == 2, "malformed file exited " + std::to_string(r.exit_code));

  const auto bad_norm = dir / "badnorm.json";
  std::ofstream(bad_norm)
      << R"({"dims": [2, 2], "amplitudes": [[1, 0], [0.5, 0], [0, 0], [0, 0]]})";
  r = run_cli("compute " + bad_norm.string(), scratch);
  require(r.exit_code == 3, "norm violation exited " + std::to_string(r.exit_code));

  r = run_cli("compute --gen random --dims " + [] {
        std::string dims = "2";
        for (int i = 1; i < 23; ++i) dims += ",2";
        return dims;
      }(),
      scratch);
  require(r.exit_code == 4, "dimension guard exited " + std::to_string(r.exit_code));

  r = run_cli("generate ghz --dims 2,3", scratch);
  require(r.exit_code == 2, "unequal ghz dims exited " + std::to_string(r.exit_code));

  // A small verify suite through the CLI.
  r = run_cli("verify lemma --trials 20 --seed 7", scratch);
  require(r.exit_code == 0, "verify lemma failed: " + r.output);

  std::filesystem::remove_all(dir);
}

// ---------------------------------------------------------------------------

struct Criterion {
  std::string name;
  double budget_seconds;  // 0 = no budget stated
  std::function<void()> run;
};

}  // namespace

int main(int argc, char** argv) {
  if (argc > 1) g_cli_path = argv[1];

  const std::vector<Criterion> criteria = {
      {"1 golden-values", 1.0, golden_values},
      {"2 lemma-identity", 5.0, lemma_identity},
      {"3 spin1-basis", 0.0, spin1_basis},
      {"4 form-agreement", 10.0, form_agreement},
      {"5 lu-invariance", 0.0, lu_invariance},
      {"6 measurement-independence", 60.0, measurement_independence},
      {"7 montecarlo-dominance", 0.0, montecarlo_dominance},
      {"8 locc-monotonicity", 60.0, locc_monotonicity},
      {"9 genuine-npartite", 0.0, genuine_npartite},
      {"10 qubit-specialization", 0.0, qubit_specialization},
      {"11 cli-round-trip", 0.0, cli_round_trip},
  };

  int failures = 0;
  for (const Criterion& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      criterion.run();
    } catch (const Failure& f) {
      ok = false;
      detail = f.detail;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("unexpected exception: ") + e.what();
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && criterion.budget_seconds > 0.0 && elapsed > criterion.budget_seconds) {
      ok = false;
      detail = "exceeded runtime budget of " + std::to_string(criterion.budget_seconds) + " s";
    }
    std::printf("[%s] %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", criterion.name.c_str(), elapsed,
                detail.empty() ? "" : " - ", detail.c_str());
    if (!ok) ++failures;
  }
  if (failures == 0)
    std::printf("acceptance: all %zu criteria passed\n", criteria.size());
  else
    std::printf("acceptance: %d of %zu criteria FAILED\n", failures, criteria.size());
  return failures;
}
