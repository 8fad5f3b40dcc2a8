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

// Grover search: closed-form two-amplitude recursion and a full statevector
// run that records the residual tangle after every iteration.

#ifndef QENT_GROVER_HPP_
#define QENT_GROVER_HPP_

#include <vector>

#include "qent/qmat.hpp"

namespace qent {

inline constexpr int kGroverMaxQubits = 14;

struct GroverParams {
  int n = 0;
  int k = 1;
  std::vector<long long> targets;  // empty means {0, ..., k-1}

  std::vector<long long> target_set() const;
  void validate() const;
};

struct GroverAmplitudes {
  double s = 0.0;  // amplitude on each marked item
  double c = 0.0;  // amplitude on each unmarked item
};

// sin^2(nu) = k / 2^n.
double grover_angle(const GroverParams& p);
GroverAmplitudes grover_amplitudes(const GroverParams& p, int j);
int optimal_iterations(const GroverParams& p);

struct GroverRecord {
  int j = 0;
  double s_abs = 0.0;
  double c_abs = 0.0;
  double d_w = 0.0;
  double amp_error = 0.0;  // statevector vs closed form, max over entries
  double norm_error = 0.0;
};

// Oracle phase flip, then inversion about the mean, j_max times; records
// j = 0..j_max with d_W taken on the given pivot qubit.
std::vector<GroverRecord> trace_run(const GroverParams& p, int j_max, int pivot = 0);
// Statevector after j iterations.
CVec grover_state(const GroverParams& p, int j);

}  // namespace qent

#endif  // QENT_GROVER_HPP_
