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
#include <string>
#include <vector>

#include "genent/common.hpp"
#include "genent/rng.hpp"

namespace genent {

struct TrialRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;  // reproduction seed for this trial
  std::string detail;
  double defect = 0.0;
  bool pass = false;
};

struct SuiteResult {
  std::string suite;
  double tolerance = 0.0;
  std::vector<TrialRecord> trials;
  double max_defect = 0.0;
  std::size_t failures = 0;

  bool passed() const { return failures == 0 && !trials.empty(); }
};

/// Random Hermitian matrix with unit trace (not necessarily positive).
Matrix random_unit_trace_hermitian(Index d, Rng& rng);

/// Basis completeness identity sum_k <A_k>^2 = Tr(sigma^2) - 1/D over random
/// unit-trace Hermitian matrices, D cycling {2,3,4,5}. Tolerance 1e-9.
SuiteResult run_lemma_suite(std::size_t trials, std::uint64_t seed);

/// |E_g(U rho U^dag) - E_g(rho)| under random local unitaries. Tolerance 1e-9.
SuiteResult run_lu_invariance_suite(std::size_t trials, std::uint64_t seed);

/// Brute-force measurement pipeline vs closed form, every subsystem of each
/// random state against `measurements` random measurements. Tolerance 1e-8.
SuiteResult run_measurement_independence_suite(std::size_t states, std::size_t measurements,
                                               std::uint64_t seed);

/// One-round LOCC trials; mean output GE must not exceed input GE + 1e-9.
SuiteResult run_locc_suite(std::size_t trials, std::uint64_t seed);

/// Monte-Carlo dominance (mc <= exact + 1e-10, no retry) and convergence
/// (relative gap < 2% at the given sample count, one reseeded retry) on
/// random two-qubit cases.
SuiteResult run_oracle_max_suite(std::size_t cases, std::size_t samples, std::uint64_t seed);

}  // namespace genent
