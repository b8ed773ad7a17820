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

#include "genent/verify.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "genent/basis.hpp"
#include "genent/measure.hpp"
#include "genent/oracle.hpp"
#include "genent/state.hpp"

namespace genent {

namespace {

// Dimension families the random-state suites cycle through.
const std::vector<std::vector<Index>> kDimFamilies = {
    {2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {2, 3, 2}};
const std::vector<std::vector<Index>> kLoccFamilies = {{2, 2}, {2, 3}, {2, 2, 2}};

std::string dims_label(const std::vector<Index>& dims) {
  std::ostringstream out;
  out << "(";
  for (std::size_t j = 0; j < dims.size(); ++j) out << (j ? "," : "") << dims[j];
  out << ")";
  return out.str();
}

void finish(SuiteResult& result) {
  for (const TrialRecord& r : result.trials) {
    result.max_defect = std::max(result.max_defect, r.defect);
    if (!r.pass) ++result.failures;
  }
}

}  // namespace

Matrix random_unit_trace_hermitian(Index d, Rng& rng) {
  Matrix g(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) g(i, j) = rng.complex_gaussian();
  Matrix h = 0.5 * (g + g.adjoint());
  h += ((1.0 - h.trace().real()) / static_cast<double>(d)) * Matrix::Identity(d, d);
  return h;
}

SuiteResult run_lemma_suite(std::size_t trials, std::uint64_t seed) {
  SuiteResult result;
  result.suite = "lemma";
  result.tolerance = 1e-9;
  std::map<Index, HermitianBasis> bases;
  for (std::size_t i = 0; i < trials; ++i) {
    const Index d = 2 + static_cast<Index>(i % 4);
    auto it = bases.find(d);
    if (it == bases.end()) it = bases.emplace(d, gell_mann_basis(d)).first;

    const std::uint64_t trial_seed = mix_seed(seed, i);
    Rng rng(trial_seed);
    const Matrix sigma = random_unit_trace_hermitian(d, rng);

    const RealVector r = expansion_coefficients(sigma, it->second);
    const double lhs = r.squaredNorm();
    const double rhs = trace_inner(sigma, sigma) - 1.0 / static_cast<double>(d);
    const double defect = std::abs(lhs - rhs);

    std::ostringstream detail;
    detail << "D=" << d;
    result.trials.push_back(
        {i, trial_seed, detail.str(), defect, defect < result.tolerance});
  }
  finish(result);
  return result;
}

SuiteResult run_lu_invariance_suite(std::size_t trials, std::uint64_t seed) {
  SuiteResult result;
  result.suite = "lu-invariance";
  result.tolerance = 1e-9;
  for (std::size_t i = 0; i < trials; ++i) {
    const std::vector<Index>& dims = kDimFamilies[i % kDimFamilies.size()];
    const std::uint64_t trial_seed = mix_seed(seed, i * 64);
    const MultipartiteState state = random_pure_state(dims, trial_seed);

    MultipartiteState rotated = state;
    for (std::size_t j = 0; j < dims.size(); ++j)
      rotated = apply_local_unitary(rotated, j,
                                    haar_random_unitary(dims[j], mix_seed(seed, i * 64 + 1 + j)));

    const double defect = std::abs(general_entanglement(state).ge_normalized -
                                   general_entanglement(rotated).ge_normalized);
    result.trials.push_back(
        {i, trial_seed, "dims " + dims_label(dims), defect, defect < result.tolerance});
  }
  finish(result);
  return result;
}

SuiteResult run_measurement_independence_suite(std::size_t states, std::size_t measurements,
                                               std::uint64_t seed) {
  SuiteResult result;
  result.suite = "measurement-independence";
  result.tolerance = 1e-8;
  std::map<Index, HermitianBasis> bases;
  for (std::size_t i = 0; i < states; ++i) {
    const std::vector<Index>& dims = kDimFamilies[i % kDimFamilies.size()];
    const std::uint64_t trial_seed = mix_seed(seed, i * 1024);
    const MultipartiteState state = random_pure_state(dims, trial_seed);

    double worst = 0.0;
    std::string worst_at;
    for (std::size_t j = 0; j < dims.size(); ++j) {
      auto it = bases.find(dims[j]);
      if (it == bases.end()) it = bases.emplace(dims[j], gell_mann_basis(dims[j])).first;
      const double closed_form = epsilon_subsystem(state, j).epsilon_raw;
      for (std::size_t m = 0; m < measurements; ++m) {
        const ProjectiveMeasurement pm = random_projective_measurement(
            dims, j, mix_seed(seed, i * 1024 + 1 + j * measurements + m));
        const double via_measurement = epsilon_via_measurement(state, j, pm, it->second);
        const double defect = std::abs(via_measurement - closed_form);
        if (defect > worst) {
          worst = defect;
          std::ostringstream at;
          at << "j=" << j << " m=" << m;
          worst_at = at.str();
        }
      }
    }
    result.trials.push_back({i, trial_seed,
                             "dims " + dims_label(dims) + (worst_at.empty() ? "" : " " + worst_at),
                             worst, worst < result.tolerance});
  }
  finish(result);
  return result;
}

SuiteResult run_locc_suite(std::size_t trials, std::uint64_t seed) {
  SuiteResult result;
  result.suite = "locc";
  result.tolerance = 1e-9;
  for (std::size_t i = 0; i < trials; ++i) {
    const std::vector<Index>& dims = kLoccFamilies[i % kLoccFamilies.size()];
    const std::uint64_t trial_seed = mix_seed(seed, i * 4);
    const MultipartiteState state = random_pure_state(dims, trial_seed);
    const LoccTrialResult trial = locc_monotonicity_trial(state, mix_seed(seed, i * 4 + 1));

    // Positive defect means the protocol raised the mean entanglement.
    const double defect = trial.mean_output_ge - trial.input_ge;
    std::ostringstream detail;
    detail << "dims " << dims_label(dims) << " in=" << trial.input_ge
           << " out=" << trial.mean_output_ge;
    result.trials.push_back(
        {i, trial_seed, detail.str(), defect, defect <= result.tolerance});
  }
  finish(result);
  return result;
}

SuiteResult run_oracle_max_suite(std::size_t cases, std::size_t samples, std::uint64_t seed) {
  SuiteResult result;
  result.suite = "oracle-max";
  result.tolerance = 0.02;
  const std::vector<Index> dims{2, 2};
  const HermitianBasis basis = gell_mann_basis(2);
  for (std::size_t i = 0; i < cases; ++i) {
    const std::uint64_t trial_seed = mix_seed(seed, i * 8);
    const MultipartiteState state = random_pure_state(dims, trial_seed);
    const std::size_t j = i % 2;
    const ProjectiveMeasurement pm =
        random_projective_measurement(dims, j, mix_seed(seed, i * 8 + 1));
    const auto outcomes = apply_measurement(state, pm);

    bool ok = true;
    double worst_gap = 0.0;
    std::string note;
    for (std::size_t oi = 0; oi < outcomes.size(); ++oi) {
      const double exact = max_r_exact(state, outcomes[oi], j, basis);
      double mc =
          max_r_montecarlo(state, outcomes[oi], j, basis, samples, mix_seed(seed, i * 8 + 2 + oi));
      if (mc > exact + 1e-10) {
        ok = false;
        note = "dominance violated";
        worst_gap = mc - exact;
        break;
      }
      if (exact <= 1e-9) continue;  // nothing to converge to
      double gap = (exact - mc) / exact;
      if (gap >= result.tolerance) {
        // Statistical check: one reseeded retry.
        mc = max_r_montecarlo(state, outcomes[oi], j, basis, samples,
                              mix_seed(seed, i * 8 + 5 + oi));
        if (mc > exact + 1e-10) {
          ok = false;
          note = "dominance violated";
          worst_gap = mc - exact;
          break;
        }
        gap = (exact - mc) / exact;
        if (gap >= result.tolerance) {
          ok = false;
          note = "convergence gap after retry";
        }
      }
      worst_gap = std::max(worst_gap, gap);
    }
    std::ostringstream detail;
    detail << "j=" << j << " outcomes=" << outcomes.size();
    if (!note.empty()) detail << " " << note;
    result.trials.push_back({i, trial_seed, detail.str(), worst_gap, ok});
  }
  finish(result);
  return result;
}

}  // namespace genent
