// Copyright 2026 The entdist Authors
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
#include <string>

namespace entdist {

/// A precondition on an argument was violated (non-Hermitian input, bad
/// probability vector, parameter out of range, ...).
class ContractError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A subsystem index is out of range or repeated.
class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// A result would exceed the 64-dimensional working cap.
class SizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// The requested quantity has no implemented algorithm for this input.
class UnsupportedError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace entdist
