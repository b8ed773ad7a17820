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

#include "genent/oracle.hpp"

#include <cmath>
#include <sstream>

#include "genent/measure.hpp"

namespace genent {

namespace {

std::vector<std::size_t> all_but(std::size_t n, std::size_t j) {
  std::vector<std::size_t> rest;
  rest.reserve(n - 1);
  for (std::size_t k = 0; k < n; ++k)
    if (k != j) rest.push_back(k);
  return rest;
}

/// Collapse under a rank-one measurement of a single subsystem t whose
/// outcome basis is given by the columns of `local_basis`. The post states
/// keep all N subsystems, with subsystem t left in the outcome vector.
std::vector<MeasurementOutcome> measure_single_subsystem(const MultipartiteState& state,
                                                         std::size_t t,
                                                         const Matrix& local_basis) {
  const Index d = state.dims()[t];
  const std::vector<Index> t_off = composite_index_offsets(state.dims(), {t});
  const std::vector<Index> rest_off =
      composite_index_offsets(state.dims(), all_but(state.subsystem_count(), t));
  const Vector& psi = state.amplitudes();

  std::vector<MeasurementOutcome> outcomes;
  Vector overlap(static_cast<Index>(rest_off.size()));
  for (Index m = 0; m < local_basis.cols(); ++m) {
    const Vector b = local_basis.col(m);
    for (std::size_t r = 0; r < rest_off.size(); ++r) {
      cplx acc = 0.0;
      for (Index a = 0; a < d; ++a) acc += std::conj(b(a)) * psi(t_off[a] + rest_off[r]);
      overlap(static_cast<Index>(r)) = acc;
    }
    const double p = overlap.squaredNorm();
    if (p <= kOutcomeProbFloor) continue;
    Vector post = Vector::Zero(psi.size());
    for (Index a = 0; a < d; ++a)
      for (std::size_t r = 0; r < rest_off.size(); ++r)
        post(t_off[a] + rest_off[r]) = b(a) * overlap(static_cast<Index>(r));
    outcomes.push_back(
        {p, MultipartiteState::renormalized(state.dims(), std::move(post))});
  }
  return outcomes;
}

}  // namespace

void validate_measurement(const MultipartiteState& state, const ProjectiveMeasurement& m) {
  if (m.excluded >= state.subsystem_count())
    throw std::invalid_argument("measurement: excluded subsystem index out of range");
  Index rest_dim = 1;
  for (std::size_t k = 0; k < state.subsystem_count(); ++k)
    if (k != m.excluded) rest_dim *= state.dims()[k];
  if (m.rest_basis.rows() != rest_dim)
    throw std::invalid_argument("measurement: outcome vectors do not match the rest space");
  if (m.rest_basis.cols() != rest_dim) {
    std::ostringstream msg;
    msg << "measurement incomplete: expected " << rest_dim << " outcome vectors, got "
        << m.rest_basis.cols();
    throw std::invalid_argument(msg.str());
  }
  const double defect = unitarity_defect(m.rest_basis);
  if (defect > kOrthoTol) {
    std::ostringstream msg;
    msg << "measurement orthonormality invariant violated: defect " << defect << " exceeds "
        << kOrthoTol;
    throw invariant_error(msg.str());
  }
}

ObservableElement make_observable(std::size_t subsystem, Matrix op) {
  const double herm = hermiticity_defect(op);
  if (herm > kHermitianTol) {
    std::ostringstream msg;
    msg << "observable hermiticity invariant violated: defect " << herm;
    throw invariant_error(msg.str());
  }
  const double tr = std::abs(op.trace());
  if (tr > kHermitianTol) {
    std::ostringstream msg;
    msg << "observable trace invariant violated: |Tr O| = " << tr;
    throw invariant_error(msg.str());
  }
  const double norm_defect = std::abs(trace_inner(op, op) - 1.0);
  if (norm_defect > kOrthoTol) {
    std::ostringstream msg;
    msg << "observable normalization invariant violated: |Tr O^2 - 1| = " << norm_defect;
    throw invariant_error(msg.str());
  }
  return {subsystem, std::move(op)};
}

ObservableElement random_observable(std::size_t subsystem, const HermitianBasis& basis,
                                    Rng& rng) {
  const RealVector o = rng.unit_sphere_vector(static_cast<Index>(basis.ops.size()));
  Matrix op = Matrix::Zero(basis.dim, basis.dim);
  for (std::size_t k = 0; k < basis.ops.size(); ++k)
    op += o(static_cast<Index>(k)) * basis.ops[k];
  return {subsystem, std::move(op)};
}

std::vector<MeasurementOutcome> apply_measurement(const MultipartiteState& state,
                                                  const ProjectiveMeasurement& m) {
  validate_measurement(state, m);
  const std::size_t j = m.excluded;
  const Index d = state.dims()[j];
  const std::vector<Index> j_off = composite_index_offsets(state.dims(), {j});
  const std::vector<Index> rest_off =
      composite_index_offsets(state.dims(), all_but(state.subsystem_count(), j));
  const Vector& psi = state.amplitudes();
  const Index rest_dim = static_cast<Index>(rest_off.size());

  std::vector<MeasurementOutcome> outcomes;
  Vector coeff(d);
  for (Index i = 0; i < rest_dim; ++i) {
    const Vector chi = m.rest_basis.col(i);
    // (I x |chi><chi|) psi = sum_a |a>|chi> <chi|psi_a>.
    for (Index a = 0; a < d; ++a) {
      cplx acc = 0.0;
      for (Index r = 0; r < rest_dim; ++r) acc += std::conj(chi(r)) * psi(j_off[a] + rest_off[r]);
      coeff(a) = acc;
    }
    const double p = coeff.squaredNorm();
    if (p <= kOutcomeProbFloor) continue;
    Vector post(psi.size());
    for (Index a = 0; a < d; ++a)
      for (Index r = 0; r < rest_dim; ++r) post(j_off[a] + rest_off[r]) = coeff(a) * chi(r);
    outcomes.push_back(
        {p, MultipartiteState::renormalized(state.dims(), std::move(post))});
  }
  return outcomes;
}

double r_value(const MultipartiteState& state, const MeasurementOutcome& outcome,
               const ObservableElement& obs) {
  const std::size_t j = obs.subsystem;
  if (j >= state.subsystem_count())
    throw std::invalid_argument("r_value: observable subsystem index out of range");
  if (obs.op.rows() != state.dims()[j] || obs.op.cols() != state.dims()[j])
    throw std::invalid_argument("r_value: observable shape does not match subsystem");
  const double before = trace_inner(reduced_density(state, {j}).matrix(), obs.op);
  const double after = trace_inner(reduced_density(outcome.post_state, {j}).matrix(), obs.op);
  const double diff = before - after;
  return diff * diff;
}

double max_r_exact(const MultipartiteState& state, const MeasurementOutcome& outcome,
                   std::size_t j, const HermitianBasis& basis) {
  const RealVector before = local_expectations(state, j, basis);
  const RealVector after = local_expectations(outcome.post_state, j, basis);
  return (after - before).squaredNorm();
}

double max_r_montecarlo(const MultipartiteState& state, const MeasurementOutcome& outcome,
                        std::size_t j, const HermitianBasis& basis, std::size_t samples,
                        std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("max_r_montecarlo: need at least one sample");
  if (j >= state.subsystem_count())
    throw std::invalid_argument("max_r_montecarlo: subsystem index out of range");
  if (basis.dim != state.dims()[j])
    throw std::invalid_argument("max_r_montecarlo: basis dimension does not match subsystem");
  Rng rng(seed);
  const Matrix rho_before = reduced_density(state, {j}).matrix();
  const Matrix rho_after = reduced_density(outcome.post_state, {j}).matrix();
  double best = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    const ObservableElement obs = random_observable(j, basis, rng);
    const double diff = trace_inner(rho_before, obs.op) - trace_inner(rho_after, obs.op);
    best = std::max(best, diff * diff);
  }
  return best;
}

double epsilon_via_measurement(const MultipartiteState& state, std::size_t j,
                               const ProjectiveMeasurement& m, const HermitianBasis& basis) {
  if (m.excluded != j)
    throw std::invalid_argument("epsilon_via_measurement: measurement must exclude subsystem j");
  if (basis.dim != state.dims().at(j))
    throw std::invalid_argument("epsilon_via_measurement: basis dimension does not match subsystem");
  validate_measurement(state, m);
  double acc = 0.0;
  for (const MeasurementOutcome& outcome : apply_measurement(state, m))
    acc += outcome.probability * max_r_exact(state, outcome, j, basis);
  return acc;
}

ProjectiveMeasurement random_projective_measurement(const std::vector<Index>& dims,
                                                    std::size_t excluded, std::uint64_t seed) {
  if (excluded >= dims.size())
    throw std::invalid_argument("random_projective_measurement: excluded index out of range");
  Index rest_dim = 1;
  for (std::size_t k = 0; k < dims.size(); ++k)
    if (k != excluded) rest_dim *= dims[k];
  return {excluded, haar_random_unitary(rest_dim, seed)};
}

LoccTrialResult locc_monotonicity_trial(const MultipartiteState& state, std::uint64_t seed) {
  const std::size_t n = state.subsystem_count();
  if (n < 2)
    throw std::invalid_argument("locc_monotonicity_trial: at least two subsystems required");
  Rng rng(seed);
  const std::size_t t = static_cast<std::size_t>(rng.below(n));
  const Matrix local_basis = haar_random_unitary(state.dims()[t], mix_seed(seed, 1));

  LoccTrialResult result;
  result.input_ge = ge_purity_form(state);
  std::size_t outcome_index = 0;
  for (const MeasurementOutcome& outcome : measure_single_subsystem(state, t, local_basis)) {
    MultipartiteState corrected = outcome.post_state;
    for (std::size_t k = 0; k < n; ++k) {
      if (k == t) continue;
      const Matrix u =
          haar_random_unitary(state.dims()[k], mix_seed(seed, 2 + outcome_index * n + k));
      corrected = apply_local_unitary(corrected, k, u);
    }
    result.mean_output_ge += outcome.probability * ge_purity_form(corrected);
    ++outcome_index;
  }
  return result;
}

}  // namespace genent
