// Copyright 2026 The qbatch Authors
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

namespace qbatch {

/// Malformed or inconsistent input: bad documents, out-of-range indices,
/// unknown ids, invalid parameters.
class InputError : public std::invalid_argument {
 public:
  explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// The exact solver refused an instance whose search space exceeds its guard.
class SolverLimitError : public std::runtime_error {
 public:
  explicit SolverLimitError(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace qbatch
