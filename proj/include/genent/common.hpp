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

#include <complex>

#include <Eigen/Dense>

namespace genent {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// Global size guard: no state vector or matrix may exceed this many
// complex entries.
inline constexpr Index kMaxEntries = Index{1} << 22;

// Tolerances backing the type invariants.
inline constexpr double kNormTol = 1e-10;       // | ||psi||^2 - 1 |
inline constexpr double kHermitianTol = 1e-12;  // max |M - M^dag|
inline constexpr double kTraceTol = 1e-10;      // |Tr rho - 1|
inline constexpr double kPsdTol = 1e-10;        // smallest eigenvalue >= -tol
inline constexpr double kOrthoTol = 1e-10;      // Gram matrix vs identity
inline constexpr double kIngestNormTol = 1e-8;  // file ingestion, pre-renormalization
inline constexpr double kOutcomeProbFloor = 1e-12;
inline constexpr double kPivotTol = 1e-9;       // Gram-Schmidt rank deficiency

/// max entrywise |M - M^dag|.
double hermiticity_defect(const Matrix& m);

/// Tr(ab) as a complex scalar.
cplx trace_product(const Matrix& a, const Matrix& b);

/// Tr(ab) for Hermitian a, b; real by symmetry.
double trace_inner(const Matrix& a, const Matrix& b);

/// max entrywise |U^dag U - I|; zero for unitary (or isometric) columns.
double unitarity_defect(const Matrix& u);

}  // namespace genent
