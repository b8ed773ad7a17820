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

#include "genent/states.hpp"

#include <cmath>

#include "genent/rng.hpp"

namespace genent {

MultipartiteState bell_state() {
  Vector amp = Vector::Zero(4);
  amp(0) = amp(3) = 1.0 / std::sqrt(2.0);
  return MultipartiteState({2, 2}, std::move(amp));
}

MultipartiteState ghz_state(std::size_t n, Index d) {
  if (n < 2) throw std::invalid_argument("ghz_state: at least two subsystems required");
  std::vector<Index> dims(n, d);
  const Index total = checked_total_dim(dims);
  Vector amp = Vector::Zero(total);
  // |ii...i> sits at i * (d^n - 1)/(d - 1).
  const Index step = (total - 1) / (d - 1);
  const double a = 1.0 / std::sqrt(static_cast<double>(d));
  for (Index i = 0; i < d; ++i) amp(i * step) = a;
  return MultipartiteState(std::move(dims), std::move(amp));
}

MultipartiteState w_state(std::size_t n) {
  if (n < 2) throw std::invalid_argument("w_state: at least two subsystems required");
  std::vector<Index> dims(n, 2);
  const Index total = checked_total_dim(dims);
  Vector amp = Vector::Zero(total);
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t j = 0; j < n; ++j) amp(Index{1} << j) = a;
  return MultipartiteState(std::move(dims), std::move(amp));
}

MultipartiteState basis_state(const std::vector<Index>& dims, const std::vector<Index>& labels) {
  if (labels.size() != dims.size())
    throw std::invalid_argument("basis_state: need one label per subsystem");
  const Index total = checked_total_dim(dims);
  Index idx = 0;
  for (std::size_t j = 0; j < dims.size(); ++j) {
    if (labels[j] < 0 || labels[j] >= dims[j])
      throw std::invalid_argument("basis_state: label out of range");
    idx = idx * dims[j] + labels[j];
  }
  Vector amp = Vector::Zero(total);
  amp(idx) = 1.0;
  return MultipartiteState(dims, std::move(amp));
}

MultipartiteState random_product_state(const std::vector<Index>& dims, std::uint64_t seed) {
  if (dims.size() < 2)
    throw std::invalid_argument("random_product_state: at least two subsystems required");
  checked_total_dim(dims);
  Rng rng(seed);
  Vector acc = Vector::Ones(1);
  for (Index d : dims) {
    Vector factor = rng.complex_gaussian_vector(d);
    factor.normalize();
    Vector next(acc.size() * d);
    for (Index i = 0; i < acc.size(); ++i)
      for (Index k = 0; k < d; ++k) next(i * d + k) = acc(i) * factor(k);
    acc = std::move(next);
  }
  return MultipartiteState(dims, std::move(acc));
}

}  // namespace genent
