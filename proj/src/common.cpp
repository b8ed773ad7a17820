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

#include "genent/common.hpp"

namespace genent {

double hermiticity_defect(const Matrix& m) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

cplx trace_product(const Matrix& a, const Matrix& b) {
  // Tr(ab) = sum_ij a_ij b_ji, evaluated without forming the product.
  return a.cwiseProduct(b.transpose()).sum();
}

double trace_inner(const Matrix& a, const Matrix& b) {
  return trace_product(a, b).real();
}

double unitarity_defect(const Matrix& u) {
  const Matrix gram = u.adjoint() * u;
  return (gram - Matrix::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
}

}  // namespace genent
