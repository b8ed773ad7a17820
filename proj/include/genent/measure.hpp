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

#include <cstddef>
#include <optional>
#include <vector>

#include "genent/basis.hpp"
#include "genent/common.hpp"
#include "genent/state.hpp"

namespace genent {

/// Per-subsystem entanglement. epsilon_raw is the average maximal squared
/// shift a measurement of the rest can induce in a local expectation value;
/// it equals 1 - 1/D - |<A>|^2 = 1 - Tr(rho_j^2) and lives in
/// [0, 1 - 1/D]. epsilon_normalized rescales by 1/(1 - 1/D) into [0, 1].
struct SubsystemEntanglement {
  std::size_t subsystem = 0;
  double epsilon_raw = 0.0;
  double epsilon_normalized = 0.0;
  double expectation_norm_sq = 0.0;  // <A>.<A> over an orthonormal local basis
};

/// Aggregate report. ge_normalized is computed from local expectation
/// vectors, ge_via_purity from reduced purities; the two routes are
/// algebraically equal and their numerical gap is recorded as
/// agreement_defect. ge_raw is the unnormalized mean of epsilon_raw.
struct GEReport {
  std::vector<SubsystemEntanglement> per_subsystem;
  double ge_raw = 0.0;
  double ge_normalized = 0.0;
  double ge_via_purity = 0.0;
  double agreement_defect = 0.0;
  std::optional<double> genuine;
};

/// A two-block split of the subsystems, named by one block. Canonical form
/// keeps subsystem 0 in the block, so enumeration yields each split once:
/// 2^(N-1) - 1 of them.
struct Bipartition {
  std::vector<std::size_t> block;

  static std::vector<Bipartition> enumerate_canonical(std::size_t n);
};

/// Expectation values <A_k> = Tr(rho_j A_k) of the basis operators on the
/// reduced state of subsystem j.
RealVector local_expectations(const MultipartiteState& state, std::size_t j,
                              const HermitianBasis& basis);

/// Per-subsystem entanglement via the purity of the reduced state.
SubsystemEntanglement epsilon_subsystem(const MultipartiteState& state, std::size_t j);

/// Full report: expectation-value route (with generalized Gell-Mann bases)
/// and purity route, cross-checked. Requires N >= 2.
GEReport general_entanglement(const MultipartiteState& state);

/// Genuine N-partite variant: minimum of ge_normalized over the state and
/// all canonical two-block regroupings; zero iff some bipartition is
/// separable. For N = 2 it equals general_entanglement by convention.
double genuine_entanglement(const MultipartiteState& state);

/// All-qubit specialization 1 - (4/N) sum_j <S_vec^(j)>^2; agrees with
/// general_entanglement on qubit systems.
double meyer_wallach(const MultipartiteState& state);

/// Two-qubit concurrence |<psi| sigma_y x sigma_y |psi*>|; the squared value
/// equals the general entanglement of the pair.
double concurrence_two_qubit(const MultipartiteState& state);

/// GE from per-subsystem reduced purities alone (the basis-free route).
double ge_from_purities(const std::vector<Index>& dims, const std::vector<double>& purities);
double ge_purity_form(const MultipartiteState& state);

/// GE from expectation vectors under caller-supplied bases, bases[j]
/// matching dims[j]; lets alternative orthonormal bases be plugged in.
double ge_expectation_form(const MultipartiteState& state,
                           const std::vector<HermitianBasis>& bases);

}  // namespace genent
