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

#include <algorithm>
#include <vector>

#include <Eigen/Eigenvalues>

#include "genent/common.hpp"
#include "genent/state.hpp"

namespace genent::test {

/// Digits of a full lexicographic index, subsystem 0 most significant.
inline std::vector<Index> index_digits(Index i, const std::vector<Index>& dims) {
  std::vector<Index> digits(dims.size());
  for (std::size_t j = dims.size(); j-- > 0;) {
    digits[j] = i % dims[j];
    i /= dims[j];
  }
  return digits;
}

inline Index digits_to_index(const std::vector<Index>& digits, const std::vector<Index>& dims) {
  Index i = 0;
  for (std::size_t j = 0; j < dims.size(); ++j) i = i * dims[j] + digits[j];
  return i;
}

/// Reference partial trace: a direct pairwise scan over all full indices,
/// written independently of the library's gather/outer-product kernel.
/// keep must be sorted ascending.
inline Matrix naive_partial_trace(const Vector& psi, const std::vector<Index>& dims,
                                  const std::vector<std::size_t>& keep) {
  Index kept_dim = 1;
  for (std::size_t j : keep) kept_dim *= dims[j];
  Matrix rho = Matrix::Zero(kept_dim, kept_dim);
  for (Index x = 0; x < psi.size(); ++x) {
    const auto dx = index_digits(x, dims);
    for (Index y = 0; y < psi.size(); ++y) {
      const auto dy = index_digits(y, dims);
      bool traced_match = true;
      for (std::size_t j = 0; j < dims.size(); ++j) {
        if (std::find(keep.begin(), keep.end(), j) != keep.end()) continue;
        if (dx[j] != dy[j]) {
          traced_match = false;
          break;
        }
      }
      if (!traced_match) continue;
      Index row = 0, col = 0;
      for (std::size_t j : keep) {
        row = row * dims[j] + dx[j];
        col = col * dims[j] + dy[j];
      }
      rho(row, col) += psi(x) * std::conj(psi(y));
    }
  }
  return rho;
}

inline double max_abs_diff(const Matrix& a, const Matrix& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

/// Sorted eigenvalues, for spectrum-level comparisons across relabelings.
inline std::vector<double> sorted_eigenvalues(const Matrix& hermitian) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitian, Eigen::EigenvaluesOnly);
  std::vector<double> v(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace genent::test
