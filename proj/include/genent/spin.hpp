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

#include <array>
#include <vector>

#include "genent/basis.hpp"
#include "genent/common.hpp"

namespace genent {

// Spin operators with hbar = 1.

Matrix pauli_x();
Matrix pauli_y();
Matrix pauli_z();

/// {S_x, S_y, S_z} for spin 1/2, i.e. the Pauli matrices over 2.
std::array<Matrix, 3> spin_half_ops();

Matrix spin1_x();
Matrix spin1_y();
Matrix spin1_z();

/// The eight linearly independent spin-1 observables used to seed the
/// orthonormalization: S_z, S_x, S_y, the symmetrized products S_xy, S_xz,
/// S_yz, and the squares S_x^2, S_y^2 (the last two are not traceless).
std::vector<Matrix> spin1_candidate_set();

/// Closed-form orthonormal traceless basis the candidate set maps to:
/// the first six operators divided by sqrt(2), then
///   A_7 = sqrt(3/2) S_x^2 - sqrt(2/3) I
///   A_8 = sqrt(2) S_y^2 + (1/sqrt(2)) S_x^2 - sqrt(2) I.
HermitianBasis spin1_reference_basis();

}  // namespace genent
