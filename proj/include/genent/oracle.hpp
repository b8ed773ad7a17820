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
#include <vector>

#include "genent/basis.hpp"
#include "genent/common.hpp"
#include "genent/rng.hpp"
#include "genent/state.hpp"

namespace genent {

/// Complete rank-one projective measurement acting as identity on subsystem
/// `excluded`. The columns of rest_basis are the outcome vectors |chi_i> on
/// the space of the remaining subsystems, indexed lexicographically over
/// them in ascending original order; the full-space projectors are
/// I^(excluded) x |chi_i><chi_i|.
struct ProjectiveMeasurement {
  std::size_t excluded = 0;
  Matrix rest_basis;
};

/// Validates orthonormality/completeness of the outcome vectors against the
/// state's dimensions; wrong column count reads as an incomplete measurement.
void validate_measurement(const MultipartiteState& state, const ProjectiveMeasurement& m);

/// One measurement outcome: its probability and the collapsed pure state.
struct MeasurementOutcome {
  double probability = 0.0;
  MultipartiteState post_state;
};

/// A local observable O^(j) extended by identity on the rest. Members of
/// the maximization set are Hermitian, traceless, and unit-norm under
/// Tr(O^2); `make_observable` enforces that, `random_observable` samples
/// uniformly from it.
struct ObservableElement {
  std::size_t subsystem = 0;
  Matrix op;
};

ObservableElement make_observable(std::size_t subsystem, Matrix op);
ObservableElement random_observable(std::size_t subsystem, const HermitianBasis& basis, Rng& rng);

/// Simulates the measurement: probabilities p_i = <psi|P_i|psi> and
/// collapsed states; outcomes with p_i <= 1e-12 are omitted.
std::vector<MeasurementOutcome> apply_measurement(const MultipartiteState& state,
                                                  const ProjectiveMeasurement& m);

/// Squared shift of the local expectation value under the collapse:
/// (Tr(rho O) - Tr(rho_i O))^2.
double r_value(const MultipartiteState& state, const MeasurementOutcome& outcome,
               const ObservableElement& obs);

/// Exact maximum of r_value over the unit-norm observable set:
/// |<A>_{rho_i} - <A>_rho|^2.
double max_r_exact(const MultipartiteState& state, const MeasurementOutcome& outcome,
                   std::size_t j, const HermitianBasis& basis);

/// Monte-Carlo lower envelope of the same maximum: best r_value over
/// `samples` observables drawn uniformly from the unit sphere of basis
/// coefficients. Deterministic per seed; never exceeds max_r_exact.
double max_r_montecarlo(const MultipartiteState& state, const MeasurementOutcome& outcome,
                        std::size_t j, const HermitianBasis& basis, std::size_t samples,
                        std::uint64_t seed);

/// Probability-weighted sum of per-outcome maxima; for any complete
/// rank-one measurement this equals the closed form 1 - 1/D - |<A>|^2.
double epsilon_via_measurement(const MultipartiteState& state, std::size_t j,
                               const ProjectiveMeasurement& m, const HermitianBasis& basis);

/// Haar-random complete rank-one measurement on the complement of
/// `excluded`; deterministic per seed.
ProjectiveMeasurement random_projective_measurement(const std::vector<Index>& dims,
                                                    std::size_t excluded, std::uint64_t seed);

/// One-round LOCC sample: a Haar-random rank-one projective measurement on
/// a random subsystem, then outcome-conditioned Haar-random unitaries on
/// the remaining subsystems.
struct LoccTrialResult {
  double input_ge = 0.0;
  double mean_output_ge = 0.0;
};

LoccTrialResult locc_monotonicity_trial(const MultipartiteState& state, std::uint64_t seed);

}  // namespace genent
