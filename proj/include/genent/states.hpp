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

#include "genent/state.hpp"

namespace genent {

/// (|00> + |11>) / sqrt(2).
MultipartiteState bell_state();

/// n subsystems of equal dimension d, (1/sqrt(d)) sum_i |i i ... i>.
MultipartiteState ghz_state(std::size_t n, Index d = 2);

/// n qubits, (1/sqrt(n)) sum_j |0...1_j...0>.
MultipartiteState w_state(std::size_t n);

/// Computational basis state |labels[0] labels[1] ...>.
MultipartiteState basis_state(const std::vector<Index>& dims, const std::vector<Index>& labels);

/// Tensor product of independent Haar-random single-subsystem states;
/// completely separable by construction. Deterministic per seed.
MultipartiteState random_product_state(const std::vector<Index>& dims, std::uint64_t seed);

}  // namespace genent
