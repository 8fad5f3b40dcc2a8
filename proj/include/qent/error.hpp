// Copyright 2026 The qent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QENT_ERROR_HPP_
#define QENT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace qent {

// Raised when an argument lies outside the numeric domain of an operation
// (negative sample count, R outside [1,4], unsorted probabilities, ...).
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

// Raised when an iterative routine gives up (quadrature, integrator).
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

inline void require(bool cond, const std::string& msg) {
  if (!cond) throw DomainError(msg);
}

}  // namespace qent

#endif  // QENT_ERROR_HPP_
