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

#include "genent/measure.hpp"

#include <cmath>
#include <map>
#include <sstream>

#include "genent/spin.hpp"

namespace genent {

namespace {

void require_multipartite(const MultipartiteState& state, const char* who) {
  if (state.subsystem_count() < 2)
    throw std::invalid_argument(std::string(who) + ": at least two subsystems required");
}

RealVector expectations_of(const Matrix& rho, const HermitianBasis& basis) {
  RealVector v(static_cast<Index>(basis.ops.size()));
  for (std::size_t k = 0; k < basis.ops.size(); ++k) {
    const cplx value = trace_product(rho, basis.ops[k]);
    if (std::abs(value.imag()) > kHermitianTol) {
      std::ostringstream msg;
      msg << "local expectation " << k << " has imaginary defect " << value.imag();
      throw invariant_error(msg.str());
    }
    v(static_cast<Index>(k)) = value.real();
  }
  return v;
}

}  // namespace

std::vector<Bipartition> Bipartition::enumerate_canonical(std::size_t n) {
  if (n < 2)
    throw std::invalid_argument("Bipartition: at least two subsystems required");
  std::vector<Bipartition> out;
  const std::uint64_t combos = std::uint64_t{1} << (n - 1);
  out.reserve(combos - 1);
  // Subsystem 0 is always in the block; the mask picks companions. The full
  // set (all bits on) is excluded, so each proper split appears exactly once.
  for (std::uint64_t mask = 0; mask + 1 < combos; ++mask) {
    Bipartition p;
    p.block.push_back(0);
    for (std::size_t j = 1; j < n; ++j)
      if (mask & (std::uint64_t{1} << (j - 1))) p.block.push_back(j);
    out.push_back(std::move(p));
  }
  return out;
}

RealVector local_expectations(const MultipartiteState& state, std::size_t j,
                              const HermitianBasis& basis) {
  if (j >= state.subsystem_count())
    throw std::invalid_argument("local_expectations: subsystem index out of range");
  if (basis.dim != state.dims()[j])
    throw std::invalid_argument("local_expectations: basis dimension does not match subsystem");
  const DensityMatrix rho = reduced_density(state, {j});
  return expectations_of(rho.matrix(), basis);
}

SubsystemEntanglement epsilon_subsystem(const MultipartiteState& state, std::size_t j) {
  if (j >= state.subsystem_count())
    throw std::invalid_argument("epsilon_subsystem: subsystem index out of range");
  const double d = static_cast<double>(state.dims()[j]);
  const double p = purity(reduced_density(state, {j}));
  SubsystemEntanglement e;
  e.subsystem = j;
  e.expectation_norm_sq = p - 1.0 / d;
  e.epsilon_raw = 1.0 - p;
  e.epsilon_normalized = e.epsilon_raw / (1.0 - 1.0 / d);
  return e;
}

GEReport general_entanglement(const MultipartiteState& state) {
  require_multipartite(state, "general_entanglement");
  const std::size_t n = state.subsystem_count();
  const double inv_n = 1.0 / static_cast<double>(n);

  std::map<Index, HermitianBasis> bases;
  GEReport report;
  report.per_subsystem.reserve(n);

  double sum_scaled_norm_sq = 0.0;  // sum_j D/(D-1) <A>.<A>
  double sum_raw = 0.0;
  double sum_inv_dm1 = 0.0;         // sum_j 1/(D-1)
  double sum_scaled_purity = 0.0;   // sum_j D/(D-1) Tr(rho_j^2)

  for (std::size_t j = 0; j < n; ++j) {
    const Index dj = state.dims()[j];
    const double d = static_cast<double>(dj);
    auto it = bases.find(dj);
    if (it == bases.end()) it = bases.emplace(dj, gell_mann_basis(dj)).first;

    const DensityMatrix rho = reduced_density(state, {j});
    const RealVector v = expectations_of(rho.matrix(), it->second);

    SubsystemEntanglement e;
    e.subsystem = j;
    e.expectation_norm_sq = v.squaredNorm();
    e.epsilon_raw = 1.0 - 1.0 / d - e.expectation_norm_sq;
    e.epsilon_normalized = e.epsilon_raw / (1.0 - 1.0 / d);
    report.per_subsystem.push_back(e);

    sum_scaled_norm_sq += d / (d - 1.0) * e.expectation_norm_sq;
    sum_raw += e.epsilon_raw;
    sum_inv_dm1 += 1.0 / (d - 1.0);
    sum_scaled_purity += d / (d - 1.0) * purity(rho);
  }

  report.ge_raw = inv_n * sum_raw;
  report.ge_normalized = 1.0 - inv_n * sum_scaled_norm_sq;
  report.ge_via_purity = 1.0 + inv_n * sum_inv_dm1 - inv_n * sum_scaled_purity;
  report.agreement_defect = std::abs(report.ge_normalized - report.ge_via_purity);
  return report;
}

double ge_from_purities(const std::vector<Index>& dims, const std::vector<double>& purities) {
  if (dims.size() != purities.size() || dims.size() < 2)
    throw std::invalid_argument("ge_from_purities: need one purity per subsystem, N >= 2");
  const double inv_n = 1.0 / static_cast<double>(dims.size());
  double acc = 1.0;
  for (std::size_t j = 0; j < dims.size(); ++j) {
    const double d = static_cast<double>(dims[j]);
    if (d < 2.0) throw std::invalid_argument("ge_from_purities: dimensions must be >= 2");
    acc += inv_n * (1.0 - d * purities[j]) / (d - 1.0);
  }
  return acc;
}

double ge_purity_form(const MultipartiteState& state) {
  require_multipartite(state, "ge_purity_form");
  std::vector<double> purities;
  purities.reserve(state.subsystem_count());
  for (std::size_t j = 0; j < state.subsystem_count(); ++j)
    purities.push_back(purity(reduced_density(state, {j})));
  return ge_from_purities(state.dims(), purities);
}

double ge_expectation_form(const MultipartiteState& state,
                           const std::vector<HermitianBasis>& bases) {
  require_multipartite(state, "ge_expectation_form");
  if (bases.size() != state.subsystem_count())
    throw std::invalid_argument("ge_expectation_form: need one basis per subsystem");
  const double inv_n = 1.0 / static_cast<double>(state.subsystem_count());
  double acc = 1.0;
  for (std::size_t j = 0; j < state.subsystem_count(); ++j) {
    const double d = static_cast<double>(state.dims()[j]);
    const RealVector v = local_expectations(state, j, bases[j]);
    acc -= inv_n * d / (d - 1.0) * v.squaredNorm();
  }
  return acc;
}

double genuine_entanglement(const MultipartiteState& state) {
  require_multipartite(state, "genuine_entanglement");
  const double whole = general_entanglement(state).ge_normalized;
  if (state.subsystem_count() == 2) return whole;

  double best = whole;
  for (const Bipartition& p : Bipartition::enumerate_canonical(state.subsystem_count())) {
    const MultipartiteState merged = merge_bipartition(state, p.block);
    // Both sides of a pure bipartite state share a spectrum; reduce the
    // smaller block.
    const std::size_t side = merged.dims()[0] <= merged.dims()[1] ? 0 : 1;
    const double p_side = purity(reduced_density(merged, {side}));
    best = std::min(best, ge_from_purities(merged.dims(), {p_side, p_side}));
  }
  return best;
}

double meyer_wallach(const MultipartiteState& state) {
  require_multipartite(state, "meyer_wallach");
  for (Index d : state.dims())
    if (d != 2) throw std::invalid_argument("meyer_wallach: all subsystems must be qubits");
  const auto spin = spin_half_ops();
  double sum = 0.0;
  for (std::size_t j = 0; j < state.subsystem_count(); ++j) {
    const DensityMatrix rho = reduced_density(state, {j});
    for (const Matrix& s : spin) {
      const double ev = trace_inner(rho.matrix(), s);
      sum += ev * ev;
    }
  }
  return 1.0 - 4.0 / static_cast<double>(state.subsystem_count()) * sum;
}

double concurrence_two_qubit(const MultipartiteState& state) {
  if (state.dims() != std::vector<Index>{2, 2})
    throw std::invalid_argument("concurrence_two_qubit: state must be a qubit pair");
  const Vector& a = state.amplitudes();
  // <psi| sigma_y x sigma_y |psi*> contracted against the antidiagonal
  // (-1, 1, 1, -1).
  const cplx s = 2.0 * (std::conj(a(1)) * std::conj(a(2)) - std::conj(a(0)) * std::conj(a(3)));
  return std::abs(s);
}

}  // namespace genent
