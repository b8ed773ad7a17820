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
#include <vector>

#include "genent/common.hpp"
#include "genent/errors.hpp"

namespace genent {

/// Orthonormal basis of the traceless Hermitian D x D matrices under the
/// trace scalar product (A, B) = Tr(AB): dim^2 - 1 operators with
/// Tr(A_k) = 0 and Tr(A_k A_l) = delta_kl. Factories produce valid bases;
/// the struct itself is open so `verify_basis` can report on broken ones.
struct HermitianBasis {
  Index dim = 0;
  std::vector<Matrix> ops;
};

struct BasisReport {
  std::size_t count_expected = 0;
  std::size_t count_actual = 0;
  double max_hermiticity_defect = 0.0;
  double max_trace_defect = 0.0;
  double max_gram_defect = 0.0;
  bool pass = false;
};

/// Generalized Gell-Mann construction for any D >= 2, normalized to
/// Tr(A_k^2) = 1. Ordering: D(D-1)/2 symmetric pair operators, then
/// D(D-1)/2 antisymmetric, then D-1 diagonal. For D = 2 this is the three
/// Pauli matrices divided by sqrt(2).
HermitianBasis gell_mann_basis(Index d);

/// Projects each Hermitian candidate traceless (subtracting (Tr/D) I), then
/// classical Gram-Schmidt under the trace scalar product with one
/// re-orthogonalization pass. Output ordering follows input ordering.
/// A post-projection pivot below 1e-9 raises degenerate_input_error naming
/// the offending candidate.
HermitianBasis gram_schmidt_orthonormalize(const std::vector<Matrix>& candidates);

/// Coefficients r_k = Tr(sigma A_k) of the traceless part of a unit-trace
/// Hermitian sigma, so sigma = (1/D) I + sum_k r_k A_k.
RealVector expansion_coefficients(const Matrix& sigma, const HermitianBasis& basis);

/// Reports hermiticity / trace / orthonormality defects; pass at 1e-10.
BasisReport verify_basis(const HermitianBasis& basis);

}  // namespace genent
