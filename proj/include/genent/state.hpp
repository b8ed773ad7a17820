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

#include "genent/common.hpp"
#include "genent/errors.hpp"

namespace genent {

/// Pure state of a multipartite system with per-subsystem dimensions
/// dims[j] >= 2. Amplitudes are indexed lexicographically over the basis
/// labels with subsystem 0 most significant:
///
///   |i0 i1 ... i_{N-1}>  <->  (...((i0 * dims[1] + i1) * dims[2] + i2)...)
///
/// Construction validates the norm invariant (| ||psi||^2 - 1 | <= 1e-10)
/// and the 2^22-entry size guard; out-of-tolerance input is rejected, not
/// silently renormalized. Use `renormalized` for ingestion paths.
///
/// Single-subsystem values (N = 1) are permitted as tensor-product factors;
/// every entanglement-level operation requires N >= 2.
class MultipartiteState {
 public:
  MultipartiteState(std::vector<Index> dims, Vector amplitudes);

  /// Rescales to unit norm before construction.
  static MultipartiteState renormalized(std::vector<Index> dims, Vector amplitudes);

  const std::vector<Index>& dims() const { return dims_; }
  std::size_t subsystem_count() const { return dims_.size(); }
  Index dim(std::size_t j) const { return dims_.at(j); }
  Index total_dim() const { return amplitudes_.size(); }
  const Vector& amplitudes() const { return amplitudes_; }

 private:
  std::vector<Index> dims_;
  Vector amplitudes_;
};

/// Density matrix of one subsystem or block. Construction validates
/// hermiticity (1e-12), unit trace (1e-10), positivity of the spectrum
/// (>= -1e-10) and the size guard.
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m);

  Index dim() const { return matrix_.rows(); }
  const Matrix& matrix() const { return matrix_; }

 private:
  Matrix matrix_;
};

/// Tr(rho^2); in [1/dim, 1] up to tolerance.
double purity(const DensityMatrix& dm);

/// Product of the dimensions, validating each entry (>= 2) and the 2^22
/// size guard before any multiplication can overflow.
Index checked_total_dim(const std::vector<Index>& dims);

/// Kronecker product of two states: dims are concatenated, amplitude at
/// (i, j) is a_i * b_j.
MultipartiteState tensor_product(const MultipartiteState& a, const MultipartiteState& b);

/// Full-space index offsets of the listed subsystems, enumerated
/// lexicographically (first listed subsystem most significant). A full
/// index decomposes as offsets_kept[k] + offsets_rest[r] for the
/// complementary lists; this is the reshape primitive behind the partial
/// trace and measurement kernels.
std::vector<Index> composite_index_offsets(const std::vector<Index>& dims,
                                           const std::vector<std::size_t>& subs);

/// Reduced density matrix of the kept subsystems (partial trace over the
/// complement). `keep` must be a nonempty set of valid indices; the result
/// basis is lexicographic over the kept subsystems in ascending order.
DensityMatrix reduced_density(const MultipartiteState& state,
                              const std::vector<std::size_t>& keep);

/// Partial trace of a square matrix living on the tensor space described
/// by `dims`, keeping the listed subsystems.
Matrix partial_trace(const Matrix& rho, const std::vector<Index>& dims,
                     const std::vector<std::size_t>& keep);

/// Relabels subsystems: result.dims()[k] = state.dims()[perm[k]], amplitudes
/// moved accordingly. perm must be a bijection on {0..N-1}.
MultipartiteState permute_subsystems(const MultipartiteState& state,
                                     const std::vector<std::size_t>& perm);

/// Two-block regrouping: result has N = 2 with dims (prod of block dims,
/// prod of complement dims); block subsystems become most significant,
/// preserving relative order. block must be a nonempty proper subset.
MultipartiteState merge_bipartition(const MultipartiteState& state,
                                    const std::vector<std::size_t>& block);

/// Applies a single-subsystem unitary: |psi> -> (I x ... x U x ... x I)|psi>.
MultipartiteState apply_local_unitary(const MultipartiteState& state, std::size_t j,
                                      const Matrix& u);

/// Haar-distributed d x d unitary: QR of a complex Ginibre matrix with the
/// phases fixed so the triangular factor has positive real diagonal.
/// Deterministic per seed.
Matrix haar_random_unitary(Index d, std::uint64_t seed);

/// Normalized state with i.i.d. complex-Gaussian amplitudes. Requires
/// N >= 2 and every dim >= 2; deterministic per seed.
MultipartiteState random_pure_state(const std::vector<Index>& dims, std::uint64_t seed);

}  // namespace genent
