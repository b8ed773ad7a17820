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

#include "genent/basis.hpp"

#include <cmath>
#include <sstream>

namespace genent {

HermitianBasis gell_mann_basis(Index d) {
  if (d < 2) throw std::invalid_argument("gell_mann_basis: dimension must be >= 2");
  HermitianBasis basis;
  basis.dim = d;
  basis.ops.reserve(static_cast<std::size_t>(d * d - 1));
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  for (Index j = 0; j < d; ++j)
    for (Index k = j + 1; k < d; ++k) {
      Matrix m = Matrix::Zero(d, d);
      m(j, k) = inv_sqrt2;
      m(k, j) = inv_sqrt2;
      basis.ops.push_back(std::move(m));
    }
  for (Index j = 0; j < d; ++j)
    for (Index k = j + 1; k < d; ++k) {
      Matrix m = Matrix::Zero(d, d);
      m(j, k) = cplx(0.0, -inv_sqrt2);
      m(k, j) = cplx(0.0, inv_sqrt2);
      basis.ops.push_back(std::move(m));
    }
  for (Index l = 1; l < d; ++l) {
    const double c = 1.0 / std::sqrt(static_cast<double>(l) * (l + 1));
    Matrix m = Matrix::Zero(d, d);
    for (Index i = 0; i < l; ++i) m(i, i) = c;
    m(l, l) = -static_cast<double>(l) * c;
    basis.ops.push_back(std::move(m));
  }
  return basis;
}

HermitianBasis gram_schmidt_orthonormalize(const std::vector<Matrix>& candidates) {
  if (candidates.empty())
    throw std::invalid_argument("gram_schmidt_orthonormalize: candidate list is empty");
  const Index d = candidates.front().rows();
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Matrix& c = candidates[i];
    if (c.rows() != d || c.cols() != d)
      throw std::invalid_argument("gram_schmidt_orthonormalize: candidates must share one square shape");
    if (hermiticity_defect(c) > kHermitianTol) {
      std::ostringstream msg;
      msg << "gram_schmidt_orthonormalize: candidate " << i << " is not Hermitian";
      throw std::invalid_argument(msg.str());
    }
  }

  HermitianBasis basis;
  basis.dim = d;
  basis.ops.reserve(candidates.size());
  const Matrix identity = Matrix::Identity(d, d);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    Matrix v = candidates[i];
    v -= (v.trace() / static_cast<double>(d)) * identity;
    // Classical Gram-Schmidt; the second pass removes the O(eps) drift the
    // first leaves behind.
    for (int pass = 0; pass < 2; ++pass)
      for (const Matrix& a : basis.ops) v -= trace_inner(a, v) * a;
    const double norm = std::sqrt(trace_inner(v, v));
    if (norm < kPivotTol) {
      std::ostringstream msg;
      msg << "gram_schmidt_orthonormalize: candidate " << i
          << " is linearly dependent after traceless projection (pivot " << norm << ")";
      throw degenerate_input_error(msg.str());
    }
    basis.ops.push_back(v / norm);
  }
  return basis;
}

RealVector expansion_coefficients(const Matrix& sigma, const HermitianBasis& basis) {
  if (sigma.rows() != basis.dim || sigma.cols() != basis.dim)
    throw std::invalid_argument("expansion_coefficients: matrix shape does not match basis dimension");
  RealVector r(static_cast<Index>(basis.ops.size()));
  for (std::size_t k = 0; k < basis.ops.size(); ++k)
    r(static_cast<Index>(k)) = trace_inner(sigma, basis.ops[k]);
  return r;
}

BasisReport verify_basis(const HermitianBasis& basis) {
  BasisReport report;
  report.count_expected = basis.dim >= 2 ? static_cast<std::size_t>(basis.dim * basis.dim - 1) : 0;
  report.count_actual = basis.ops.size();
  for (const Matrix& a : basis.ops) {
    report.max_hermiticity_defect = std::max(report.max_hermiticity_defect, hermiticity_defect(a));
    report.max_trace_defect = std::max(report.max_trace_defect, std::abs(a.trace()));
  }
  for (std::size_t k = 0; k < basis.ops.size(); ++k)
    for (std::size_t l = k; l < basis.ops.size(); ++l) {
      const double expected = (k == l) ? 1.0 : 0.0;
      const double defect = std::abs(trace_inner(basis.ops[k], basis.ops[l]) - expected);
      report.max_gram_defect = std::max(report.max_gram_defect, defect);
    }
  report.pass = report.count_actual == report.count_expected && report.count_actual > 0 &&
                report.max_hermiticity_defect <= kOrthoTol &&
                report.max_trace_defect <= kOrthoTol && report.max_gram_defect <= kOrthoTol;
  return report;
}

}  // namespace genent
