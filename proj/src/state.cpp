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

#include "genent/state.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include "genent/rng.hpp"

namespace genent {

Index checked_total_dim(const std::vector<Index>& dims) {
  if (dims.empty()) throw std::invalid_argument("state: dims must be nonempty");
  Index total = 1;
  for (Index d : dims) {
    if (d < 2) throw std::invalid_argument("state: every subsystem dimension must be >= 2");
    if (total > kMaxEntries / d) {
      std::ostringstream msg;
      msg << "dimension guard: product of dims exceeds " << kMaxEntries << " amplitudes";
      throw resource_limit_error(msg.str());
    }
    total *= d;
  }
  return total;
}

namespace {

std::vector<Index> full_strides(const std::vector<Index>& dims) {
  std::vector<Index> strides(dims.size());
  Index s = 1;
  for (std::size_t j = dims.size(); j-- > 0;) {
    strides[j] = s;
    s *= dims[j];
  }
  return strides;
}

// Validates that subs lists distinct in-range subsystems.
void check_subsystems(const std::vector<Index>& dims, const std::vector<std::size_t>& subs,
                      const char* who) {
  std::vector<bool> seen(dims.size(), false);
  for (std::size_t j : subs) {
    if (j >= dims.size())
      throw std::invalid_argument(std::string(who) + ": subsystem index out of range");
    if (seen[j]) throw std::invalid_argument(std::string(who) + ": duplicate subsystem index");
    seen[j] = true;
  }
}

std::vector<std::size_t> complement_of(std::size_t n, const std::vector<std::size_t>& subs) {
  std::vector<bool> in(n, false);
  for (std::size_t j : subs) in[j] = true;
  std::vector<std::size_t> rest;
  rest.reserve(n - subs.size());
  for (std::size_t j = 0; j < n; ++j)
    if (!in[j]) rest.push_back(j);
  return rest;
}

}  // namespace

MultipartiteState::MultipartiteState(std::vector<Index> dims, Vector amplitudes)
    : dims_(std::move(dims)), amplitudes_(std::move(amplitudes)) {
  const Index total = checked_total_dim(dims_);
  if (amplitudes_.size() != total) {
    std::ostringstream msg;
    msg << "state: amplitude count " << amplitudes_.size() << " does not match product of dims "
        << total;
    throw invariant_error(msg.str());
  }
  const double defect = std::abs(amplitudes_.squaredNorm() - 1.0);
  if (defect > kNormTol) {
    std::ostringstream msg;
    msg << "state norm invariant violated: | ||psi||^2 - 1 | = " << defect << " exceeds "
        << kNormTol;
    throw invariant_error(msg.str());
  }
}

MultipartiteState MultipartiteState::renormalized(std::vector<Index> dims, Vector amplitudes) {
  const double norm = amplitudes.norm();
  if (norm <= 0.0) throw invariant_error("state: cannot normalize a null amplitude vector");
  amplitudes /= norm;
  return MultipartiteState(std::move(dims), std::move(amplitudes));
}

DensityMatrix::DensityMatrix(Matrix m) : matrix_(std::move(m)) {
  if (matrix_.rows() != matrix_.cols())
    throw std::invalid_argument("density matrix must be square");
  const Index d = matrix_.rows();
  if (d < 1 || d > kMaxEntries / d) {
    std::ostringstream msg;
    msg << "dimension guard: density matrix of dim " << d << " exceeds " << kMaxEntries
        << " entries";
    throw resource_limit_error(msg.str());
  }
  const double herm = hermiticity_defect(matrix_);
  if (herm > kHermitianTol) {
    std::ostringstream msg;
    msg << "density matrix hermiticity invariant violated: defect " << herm << " exceeds "
        << kHermitianTol;
    throw invariant_error(msg.str());
  }
  const double tr = std::abs(matrix_.trace().real() - 1.0) + std::abs(matrix_.trace().imag());
  if (tr > kTraceTol) {
    std::ostringstream msg;
    msg << "density matrix trace invariant violated: |Tr - 1| = " << tr << " exceeds "
        << kTraceTol;
    throw invariant_error(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(matrix_, Eigen::EigenvaluesOnly);
  const double lambda_min = es.eigenvalues().minCoeff();
  if (lambda_min < -kPsdTol) {
    std::ostringstream msg;
    msg << "density matrix positivity invariant violated: eigenvalue " << lambda_min << " below -"
        << kPsdTol;
    throw invariant_error(msg.str());
  }
}

double purity(const DensityMatrix& dm) {
  // Tr(rho^2) = Frobenius norm squared for Hermitian rho.
  return dm.matrix().squaredNorm();
}

MultipartiteState tensor_product(const MultipartiteState& a, const MultipartiteState& b) {
  std::vector<Index> dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  checked_total_dim(dims);
  const Index da = a.total_dim();
  const Index db = b.total_dim();
  Vector out(da * db);
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < db; ++j) out(i * db + j) = a.amplitudes()(i) * b.amplitudes()(j);
  return MultipartiteState(std::move(dims), std::move(out));
}

std::vector<Index> composite_index_offsets(const std::vector<Index>& dims,
                                           const std::vector<std::size_t>& subs) {
  check_subsystems(dims, subs, "composite_index_offsets");
  const std::vector<Index> strides = full_strides(dims);
  std::vector<Index> offsets{0};
  for (std::size_t j : subs) {
    std::vector<Index> next;
    next.reserve(offsets.size() * static_cast<std::size_t>(dims[j]));
    for (Index base : offsets)
      for (Index d = 0; d < dims[j]; ++d) next.push_back(base + d * strides[j]);
    offsets = std::move(next);
  }
  return offsets;
}

DensityMatrix reduced_density(const MultipartiteState& state,
                              const std::vector<std::size_t>& keep) {
  if (keep.empty()) throw std::invalid_argument("reduced_density: keep set must be nonempty");
  check_subsystems(state.dims(), keep, "reduced_density");
  std::vector<std::size_t> kept = keep;
  std::sort(kept.begin(), kept.end());
  const std::vector<std::size_t> rest = complement_of(state.subsystem_count(), kept);

  const std::vector<Index> kept_off = composite_index_offsets(state.dims(), kept);
  const std::vector<Index> rest_off = composite_index_offsets(state.dims(), rest);
  const Index k = static_cast<Index>(kept_off.size());
  if (k > kMaxEntries / k) {
    std::ostringstream msg;
    msg << "dimension guard: reduced density matrix of dim " << k << " exceeds " << kMaxEntries
        << " entries";
    throw resource_limit_error(msg.str());
  }

  // rho = sum_t |v_t><v_t| with v_t the slice of psi at fixed traced labels.
  Matrix rho = Matrix::Zero(k, k);
  Vector v(k);
  const Vector& psi = state.amplitudes();
  for (Index t : rest_off) {
    for (Index i = 0; i < k; ++i) v(i) = psi(kept_off[i] + t);
    rho.noalias() += v * v.adjoint();
  }
  return DensityMatrix(std::move(rho));
}

Matrix partial_trace(const Matrix& rho, const std::vector<Index>& dims,
                     const std::vector<std::size_t>& keep) {
  const Index total = checked_total_dim(dims);
  if (rho.rows() != total || rho.cols() != total)
    throw std::invalid_argument("partial_trace: matrix shape does not match dims");
  if (keep.empty()) throw std::invalid_argument("partial_trace: keep set must be nonempty");
  check_subsystems(dims, keep, "partial_trace");
  std::vector<std::size_t> kept = keep;
  std::sort(kept.begin(), kept.end());
  const std::vector<std::size_t> rest = complement_of(dims.size(), kept);

  const std::vector<Index> kept_off = composite_index_offsets(dims, kept);
  const std::vector<Index> rest_off = composite_index_offsets(dims, rest);
  const Index k = static_cast<Index>(kept_off.size());
  Matrix out = Matrix::Zero(k, k);
  for (Index a = 0; a < k; ++a)
    for (Index b = 0; b < k; ++b) {
      cplx acc = 0.0;
      for (Index t : rest_off) acc += rho(kept_off[a] + t, kept_off[b] + t);
      out(a, b) = acc;
    }
  return out;
}

MultipartiteState permute_subsystems(const MultipartiteState& state,
                                     const std::vector<std::size_t>& perm) {
  const std::size_t n = state.subsystem_count();
  if (perm.size() != n)
    throw std::invalid_argument("permute_subsystems: permutation size must equal subsystem count");
  check_subsystems(state.dims(), perm, "permute_subsystems");

  std::vector<Index> new_dims(n);
  for (std::size_t k = 0; k < n; ++k) new_dims[k] = state.dims()[perm[k]];

  const std::vector<Index> old_strides = full_strides(state.dims());
  const std::vector<Index> new_strides = full_strides(new_dims);

  const Vector& psi = state.amplitudes();
  Vector out(psi.size());
  std::vector<Index> digit(n);
  for (Index i = 0; i < psi.size(); ++i) {
    Index rem = i;
    for (std::size_t j = 0; j < n; ++j) {
      digit[j] = rem / old_strides[j];
      rem %= old_strides[j];
    }
    Index target = 0;
    for (std::size_t k = 0; k < n; ++k) target += digit[perm[k]] * new_strides[k];
    out(target) = psi(i);
  }
  return MultipartiteState(std::move(new_dims), std::move(out));
}

MultipartiteState merge_bipartition(const MultipartiteState& state,
                                    const std::vector<std::size_t>& block) {
  const std::size_t n = state.subsystem_count();
  if (block.empty() || block.size() >= n)
    throw std::invalid_argument("merge_bipartition: block must be a nonempty proper subset");
  check_subsystems(state.dims(), block, "merge_bipartition");

  std::vector<std::size_t> front = block;
  std::sort(front.begin(), front.end());
  const std::vector<std::size_t> back = complement_of(n, front);

  Index block_dim = 1;
  for (std::size_t j : front) block_dim *= state.dims()[j];
  Index rest_dim = 1;
  for (std::size_t j : back) rest_dim *= state.dims()[j];

  std::vector<std::size_t> perm = front;
  perm.insert(perm.end(), back.begin(), back.end());
  MultipartiteState moved = permute_subsystems(state, perm);

  // The lexicographic composite over (block digits, rest digits) equals the
  // composite over (block index, rest index), so the amplitudes carry over.
  return MultipartiteState({block_dim, rest_dim}, moved.amplitudes());
}

MultipartiteState apply_local_unitary(const MultipartiteState& state, std::size_t j,
                                      const Matrix& u) {
  if (j >= state.subsystem_count())
    throw std::invalid_argument("apply_local_unitary: subsystem index out of range");
  const Index d = state.dims()[j];
  if (u.rows() != d || u.cols() != d)
    throw std::invalid_argument("apply_local_unitary: operator shape does not match subsystem");

  const std::vector<Index> j_off = composite_index_offsets(state.dims(), {j});
  const std::vector<Index> rest_off =
      composite_index_offsets(state.dims(), complement_of(state.subsystem_count(), {j}));

  const Vector& psi = state.amplitudes();
  Vector out(psi.size());
  Vector col(d);
  for (Index r : rest_off) {
    for (Index a = 0; a < d; ++a) col(a) = psi(j_off[a] + r);
    const Vector mixed = u * col;
    for (Index a = 0; a < d; ++a) out(j_off[a] + r) = mixed(a);
  }
  return MultipartiteState(state.dims(), std::move(out));
}

Matrix haar_random_unitary(Index d, std::uint64_t seed) {
  if (d < 1) throw std::invalid_argument("haar_random_unitary: dimension must be >= 1");
  Rng rng(seed);
  Matrix g(d, d);
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) g(i, j) = rng.complex_gaussian();

  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(d, d);
  const Vector diag = qr.matrixQR().diagonal();
  // Fix column phases so the triangular factor has positive real diagonal;
  // this makes Q exactly Haar rather than Haar-up-to-phase convention.
  for (Index i = 0; i < d; ++i) {
    const double mag = std::abs(diag(i));
    if (mag > 0.0) q.col(i) *= diag(i) / mag;
  }
  return q;
}

MultipartiteState random_pure_state(const std::vector<Index>& dims, std::uint64_t seed) {
  if (dims.size() < 2)
    throw std::invalid_argument("random_pure_state: at least two subsystems required");
  const Index total = checked_total_dim(dims);
  Rng rng(seed);
  Vector v = rng.complex_gaussian_vector(total);
  return MultipartiteState::renormalized(dims, std::move(v));
}

}  // namespace genent
