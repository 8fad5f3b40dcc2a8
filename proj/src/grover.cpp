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

#include "qent/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "qent/entmeas.hpp"
#include "qent/error.hpp"

namespace qent {

namespace {

void iterate(CVec& psi, const std::vector<long long>& targets) {
  for (long long t : targets) psi[t] = -psi[t];
  const cplx mean = psi.mean();
  psi = (2.0 * mean) - psi.array();
}

CVec uniform_state(int n) {
  const long long dim = 1LL << n;
  return CVec::Constant(dim, 1.0 / std::sqrt(static_cast<double>(dim)));
}

}  // namespace

std::vector<long long> GroverParams::target_set() const {
  if (!targets.empty()) return targets;
  std::vector<long long> t(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) t[i] = i;
  return t;
}

void GroverParams::validate() const {
  require(n >= 1 && n <= 62, "qubit count out of range");
  const long long dim = 1LL << n;
  require(k >= 1 && k < dim, "marked count must satisfy 1 <= k < 2^n");
  if (!targets.empty()) {
    require(static_cast<long long>(targets.size()) == k, "target list must hold k entries");
    std::set<long long> uniq(targets.begin(), targets.end());
    require(static_cast<long long>(uniq.size()) == k, "target list has duplicates");
    for (long long t : targets) require(t >= 0 && t < dim, "target index out of range");
  }
}

double grover_angle(const GroverParams& p) {
  p.validate();
  return std::asin(std::sqrt(static_cast<double>(p.k) / std::ldexp(1.0, p.n)));
}

GroverAmplitudes grover_amplitudes(const GroverParams& p, int j) {
  require(j >= 0, "iteration index must be non-negative");
  const double nu = grover_angle(p);
  const double dim = std::ldexp(1.0, p.n);
  return {std::sin((2 * j + 1) * nu) / std::sqrt(static_cast<double>(p.k)),
          std::cos((2 * j + 1) * nu) / std::sqrt(dim - p.k)};
}

int optimal_iterations(const GroverParams& p) {
  p.validate();
  return static_cast<int>(std::lround(std::numbers::pi / 4.0 * std::sqrt(std::ldexp(1.0, p.n) / p.k)));
}

CVec grover_state(const GroverParams& p, int j) {
  p.validate();
  require(p.n <= kGroverMaxQubits, "statevector run limited to 14 qubits");
  require(j >= 0, "iteration index must be non-negative");
  const auto targets = p.target_set();
  CVec psi = uniform_state(p.n);
  for (int i = 0; i < j; ++i) iterate(psi, targets);
  return psi;
}

std::vector<GroverRecord> trace_run(const GroverParams& p, int j_max, int pivot) {
  p.validate();
  require(p.n <= kGroverMaxQubits, "statevector run limited to 14 qubits");
  require(p.n >= 2, "residual tangle needs at least two qubits");
  require(j_max >= 0, "iteration count must be non-negative");
  const auto targets = p.target_set();
  std::vector<char> marked(static_cast<std::size_t>(1LL << p.n), 0);
  for (long long t : targets) marked[t] = 1;
  CVec psi = uniform_state(p.n);
  std::vector<GroverRecord> out;
  for (int j = 0; j <= j_max; ++j) {
    if (j > 0) iterate(psi, targets);
    const GroverAmplitudes a = grover_amplitudes(p, j);
    GroverRecord r;
    r.j = j;
    r.s_abs = std::abs(a.s);
    r.c_abs = std::abs(a.c);
    for (Eigen::Index i = 0; i < psi.size(); ++i)
      r.amp_error = std::max(r.amp_error, std::abs(psi[i] - (marked[i] ? a.s : a.c)));
    r.norm_error = std::abs(psi.norm() - 1.0);
    r.d_w = residual_tangle_dW(psi, p.n, pivot);
    out.push_back(r);
  }
  return out;
}

}  // namespace qent
