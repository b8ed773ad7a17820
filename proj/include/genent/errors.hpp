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

#include <stdexcept>

namespace genent {

/// A value failed one of its declared invariants (norm, hermiticity,
/// trace, orthonormality, positivity). The message names the invariant.
class invariant_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A construction would exceed the global size guard of 2^22 complex
/// entries per state vector or matrix.
class resource_limit_error : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Gram-Schmidt input became rank deficient after traceless projection.
/// The message names the offending candidate index.
class degenerate_input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace genent
