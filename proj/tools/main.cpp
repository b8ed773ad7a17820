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

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "genent/io.hpp"
#include "genent/measure.hpp"
#include "genent/oracle.hpp"
#include "genent/spin.hpp"
#include "genent/states.hpp"
#include "genent/verify.hpp"
#include "genent/version.hpp"

namespace {

using namespace genent;

/// Bad command-line parameters (as opposed to bad data); maps to exit 2.
class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GlobalOptions {
  std::uint64_t seed = 0;
  std::string out;
  bool quiet = false;
  double tolerance = 1e-9;
};

struct GeneratorOptions {
  std::string kind;
  std::size_t n = 3;
  std::vector<Index> dims;
  std::string label;
};

struct Generated {
  MultipartiteState state;
  std::string label;
  std::optional<std::uint64_t> seed_used;
};

Generated make_generated(const GeneratorOptions& gen, std::uint64_t seed) {
  const std::string& kind = gen.kind;
  const std::string label = gen.label.empty() ? kind : gen.label;
  try {
    if (kind == "bell") {
      if (!gen.dims.empty()) throw usage_error("bell takes no --dims");
      return {bell_state(), label, std::nullopt};
    }
    if (kind == "ghz") {
      if (!gen.dims.empty()) {
        for (Index d : gen.dims)
          if (d != gen.dims.front())
            throw usage_error("ghz requires equal local dimensions");
        return {ghz_state(gen.dims.size(), gen.dims.front()), label, std::nullopt};
      }
      return {ghz_state(gen.n), label, std::nullopt};
    }
    if (kind == "w") {
      if (!gen.dims.empty()) {
        for (Index d : gen.dims)
          if (d != 2) throw usage_error("w states are defined on qubits");
        return {w_state(gen.dims.size()), label, std::nullopt};
      }
      return {w_state(gen.n), label, std::nullopt};
    }
    if (kind == "product") {
      if (gen.dims.empty()) throw usage_error("product requires --dims");
      return {random_product_state(gen.dims, seed), label, seed};
    }
    if (kind == "random") {
      if (gen.dims.empty()) throw usage_error("random requires --dims");
      return {random_pure_state(gen.dims, seed), label, seed};
    }
  } catch (const resource_limit_error&) {
    throw;  // dimension guard keeps its own exit code
  } catch (const usage_error&) {
    throw;
  } catch (const std::invalid_argument& e) {
    throw usage_error(e.what());  // generator parameter problems are usage errors
  }
  throw usage_error("unknown generator kind: " + kind);
}

void emit(const GlobalOptions& global, const std::string& text, bool quiet_line_only,
          const std::string& quiet_line) {
  if (!global.out.empty()) {
    std::ofstream file(global.out, std::ios::binary);
    if (!file) throw file_format_error("cannot write output file: " + global.out);
    file << text;
  }
  if (global.quiet && quiet_line_only)
    std::cout << quiet_line << "\n";
  else if (global.out.empty())
    std::cout << text;
}

int cmd_generate(const GlobalOptions& global, const GeneratorOptions& gen) {
  const Generated g = make_generated(gen, global.seed);
  StateFile f;
  f.dims = g.state.dims();
  f.amplitudes.assign(g.state.amplitudes().data(),
                      g.state.amplitudes().data() + g.state.total_dim());
  f.label = g.label;
  emit(global, state_file_to_json(f), false, "");
  return 0;
}

int cmd_compute(const GlobalOptions& global, const std::string& input,
                const GeneratorOptions& gen, bool genuine) {
  std::optional<MultipartiteState> state;
  std::string label;
  std::optional<std::uint64_t> seed_used;
  std::optional<double> renorm_defect;

  if (!input.empty() && !gen.kind.empty())
    throw usage_error("compute: give either an input file or --gen, not both");
  if (!input.empty()) {
    const StateFile f = read_state_file(input);
    state.emplace(ingest_state(f, &renorm_defect));
    label = f.label;
  } else if (!gen.kind.empty()) {
    Generated g = make_generated(gen, global.seed);
    state.emplace(std::move(g.state));
    label = g.label;
    seed_used = g.seed_used;
  } else {
    throw usage_error("compute: need an input file or --gen <kind>");
  }

  GEReport report = general_entanglement(*state);
  if (genuine) report.genuine = genuine_entanglement(*state);
  if (report.agreement_defect > global.tolerance) {
    std::ostringstream msg;
    msg << "report agreement invariant violated: expectation and purity routes differ by "
        << report.agreement_defect << " (tolerance " << global.tolerance << ")";
    throw invariant_error(msg.str());
  }

  ReportFile rf;
  rf.label = label;
  rf.dims = state->dims();
  rf.report = std::move(report);
  rf.renormalized_norm_defect = renorm_defect;
  rf.seed = seed_used;
  rf.version = kVersion;
  emit(global, report_to_json(rf), true, format_double17(rf.report.ge_normalized));
  return 0;
}

std::string render_suite(const SuiteResult& result) {
  std::ostringstream out;
  out << "suite " << result.suite << "  trials " << result.trials.size() << "  tolerance "
      << result.tolerance << "\n";
  for (const TrialRecord& trial : result.trials) {
    out << "trial " << trial.index << "  seed " << trial.seed;
    if (!trial.detail.empty()) out << "  " << trial.detail;
    out << "  defect " << format_double17(trial.defect) << "  "
        << (trial.pass ? "pass" : "FAIL") << "\n";
  }
  out << "max defect " << format_double17(result.max_defect) << "  failures "
      << result.failures << "/" << result.trials.size() << "  "
      << (result.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

int cmd_verify(const GlobalOptions& global, const std::string& suite, std::size_t trials,
               bool trials_given, std::size_t measurements, std::size_t samples) {
  SuiteResult result;
  if (suite == "lemma") {
    result = run_lemma_suite(trials_given ? trials : 100, global.seed);
  } else if (suite == "lu-invariance") {
    result = run_lu_invariance_suite(trials_given ? trials : 100, global.seed);
  } else if (suite == "measurement-independence") {
    result = run_measurement_independence_suite(trials_given ? trials : 20, measurements,
                                                global.seed);
  } else if (suite == "locc") {
    result = run_locc_suite(trials_given ? trials : 200, global.seed);
  } else if (suite == "oracle-max") {
    result = run_oracle_max_suite(trials_given ? trials : 20, samples, global.seed);
  } else {
    throw usage_error("unknown verify suite: " + suite);
  }
  emit(global, render_suite(result), false, "");
  return result.passed() ? 0 : 1;
}

std::string render_matrix(const Matrix& m) {
  std::ostringstream out;
  char buf[64];
  for (Index r = 0; r < m.rows(); ++r) {
    out << "    ";
    for (Index c = 0; c < m.cols(); ++c) {
      std::snprintf(buf, sizeof(buf), "(%+.4f%+.4fi) ", m(r, c).real(), m(r, c).imag());
      out << buf;
    }
    out << "\n";
  }
  return out.str();
}

int cmd_spin1_demo(const GlobalOptions& global) {
  std::ostringstream out;
  const HermitianBasis built = gram_schmidt_orthonormalize(spin1_candidate_set());
  const HermitianBasis reference = spin1_reference_basis();

  out << "spin-1 orthonormal traceless basis (Gram-Schmidt over the trace scalar product)\n";
  double max_dev = 0.0;
  for (std::size_t k = 0; k < built.ops.size(); ++k) {
    const double dev = (built.ops[k] - reference.ops[k]).cwiseAbs().maxCoeff();
    max_dev = std::max(max_dev, dev);
    out << "A" << (k + 1) << "  (deviation from closed form " << format_double17(dev) << ")\n"
        << render_matrix(built.ops[k]);
  }
  out << "max deviation from closed-form basis: " << format_double17(max_dev) << "\n\n";

  const std::vector<std::pair<std::string, MultipartiteState>> probes = {
      {"random qutrit pair", random_pure_state({3, 3}, global.seed)},
      {"maximally entangled qutrit pair", ghz_state(2, 3)},
      {"product qutrit pair", random_product_state({3, 3}, mix_seed(global.seed, 1))},
  };
  for (const auto& [name, state] : probes) {
    const double via_basis = ge_expectation_form(state, {built, built});
    const double via_purity = ge_purity_form(state);
    out << name << ": ge = " << format_double17(via_basis)
        << "  purity route = " << format_double17(via_purity)
        << "  defect = " << format_double17(std::abs(via_basis - via_purity)) << "\n";
  }
  emit(global, out.str(), false, "");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"general entanglement measure for multipartite pure states"};
  app.require_subcommand(1);

  GlobalOptions global;
  app.add_option("--seed", global.seed, "seed for every random choice (default 0)");
  app.add_option("--out", global.out, "write output to a file instead of stdout");
  app.add_flag("--quiet", global.quiet, "compute: print only ge_normalized");
  app.add_option("--tolerance", global.tolerance,
                 "report-level comparison tolerance (default 1e-9)");

  const std::vector<std::string> kinds = {"bell", "ghz", "w", "product", "random"};

  auto* generate = app.add_subcommand("generate", "write a state file");
  generate->fallthrough();
  GeneratorOptions gen_opts;
  generate->add_option("kind", gen_opts.kind, "bell | ghz | w | product | random")
      ->required()
      ->check(CLI::IsMember(kinds));
  generate->add_option("--n", gen_opts.n, "subsystem count for ghz/w (default 3)");
  generate->add_option("--dims", gen_opts.dims, "comma-separated subsystem dimensions")
      ->delimiter(',');
  generate->add_option("--label", gen_opts.label, "label stored in the file");

  auto* compute = app.add_subcommand("compute", "compute the entanglement report");
  compute->fallthrough();
  std::string compute_input;
  GeneratorOptions compute_gen;
  bool genuine = false;
  compute->add_option("input", compute_input, "state file path");
  compute->add_option("--gen", compute_gen.kind, "generate the input instead of reading a file")
      ->check(CLI::IsMember(kinds));
  compute->add_option("--n", compute_gen.n, "subsystem count for ghz/w (default 3)");
  compute->add_option("--dims", compute_gen.dims, "comma-separated subsystem dimensions")
      ->delimiter(',');
  compute->add_flag("--genuine", genuine, "also compute the genuine N-partite value");

  auto* verify = app.add_subcommand("verify", "run a property suite");
  verify->fallthrough();
  std::string suite;
  std::size_t trials = 0;
  std::size_t measurements = 20;
  std::size_t samples = 10000;
  verify
      ->add_option("suite", suite,
                   "lemma | lu-invariance | measurement-independence | locc | oracle-max")
      ->required();
  auto* trials_opt = verify->add_option("--trials", trials, "trial count (suite default)");
  verify->add_option("--measurements", measurements,
                     "measurements per subsystem (measurement-independence)");
  verify->add_option("--samples", samples, "observable samples (oracle-max)");

  auto* demo = app.add_subcommand("spin1-demo", "spin-1 basis construction walkthrough");
  demo->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (generate->parsed()) return cmd_generate(global, gen_opts);
    if (compute->parsed())
      return cmd_compute(global, compute_input, compute_gen, genuine);
    if (verify->parsed())
      return cmd_verify(global, suite, trials, trials_opt->count() > 0, measurements, samples);
    if (demo->parsed()) return cmd_spin1_demo(global);
    return 2;
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const file_format_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const resource_limit_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
