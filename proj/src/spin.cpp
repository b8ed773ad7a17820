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

#include "genent/spin.hpp"

#include <cmath>

namespace genent {

namespace {
const cplx kI{0.0, 1.0};
}

Matrix pauli_x() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix pauli_y() {
  Matrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

Matrix pauli_z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

std::array<Matrix, 3> spin_half_ops() {
  return {0.5 * pauli_x(), 0.5 * pauli_y(), 0.5 * pauli_z()};
}

Matrix spin1_x() {
  Matrix m(3, 3);
  m << 0, 1, 0, 1, 0, 1, 0, 1, 0;
  return m / std::sqrt(2.0);
}

Matrix spin1_y() {
  Matrix m(3, 3);
  m << 0, -kI, 0, kI, 0, -kI, 0, kI, 0;
  return m / std::sqrt(2.0);
}

Matrix spin1_z() {
  Matrix m(3, 3);
  m << 1, 0, 0, 0, 0, 0, 0, 0, -1;
  return m;
}

std::vector<Matrix> spin1_candidate_set() {
  const Matrix sx = spin1_x();
  const Matrix sy = spin1_y();
  const Matrix sz = spin1_z();
  return {
      sz, sx, sy,
      sx * sy + sy * sx,
      sx * sz + sz * sx,
      sy * sz + sz * sy,
      sx * sx,
      sy * sy,
  };
}

HermitianBasis spin1_reference_basis() {
  const auto candidates = spin1_candidate_set();
  const Matrix identity = Matrix::Identity(3, 3);
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  HermitianBasis basis;
  basis.dim = 3;
  for (int k = 0; k < 6; ++k) basis.ops.push_back(inv_sqrt2 * candidates[k]);
  basis.ops.push_back(std::sqrt(1.5) * candidates[6] - std::sqrt(2.0 / 3.0) * identity);
  basis.ops.push_back(std::sqrt(2.0) * candidates[7] + inv_sqrt2 * candidates[6] -
                      std::sqrt(2.0) * identity);
  return basis;
}

}  // namespace genent
