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

// Extremal Bures and Hilbert-Schmidt distances from the two-qubit maximally
// mixed state, found by annealed random walks.

#ifndef QENT_METRIC_EXTREMES_HPP_
#define QENT_METRIC_EXTREMES_HPP_

#include <cstdint>
#include <string>

#include "qent/qmat.hpp"
#include "qent/survey.hpp"

namespace qent {

enum class Metric { kBures, kHilbertSchmidt };

Metric parse_metric(const std::string& text);
std::string metric_name(Metric m);

// Distance to I/4, from the spectrum alone.
double distance_to_mixed(const CMat& rho, Metric m);

// diag(1/6, 1/6, 1/6, 1/2) in the Bell frame, weight 1/2 on Phi+. It sits on
// the purity-1/3 sphere and on the PPT boundary.
CMat min_witness_state();
// |00><00|.
CMat max_witness_state();

struct AnnealOptions {
  int steps = 20000;
  int walks = 8;
  double t0 = 0.002;     // initial temperature, in distance units
  double step0 = 0.1;    // initial proposal scale; shrinks with the temperature
  double cooling = 0.999;
  int threads = 0;
};

struct ExtremeSearch {
  double best = 0.0;
  CMat state;
  SurveyEstimate walks;    // spread of the per-walk results
  bool converged = false;  // best two walks agree within 1e-4
  long long accepted = 0;
  long long constraint_violations = 0;  // accepted states failing the constraint; expected 0
};

// Minimum distance over entangled (PPT-failing) states.
ExtremeSearch min_distance_to_mm(Metric m, std::uint64_t seed, const AnnealOptions& opts = {});
// Maximum distance over separable states, walked as mixtures of product states.
ExtremeSearch max_distance_in_sep(Metric m, std::uint64_t seed, const AnnealOptions& opts = {});

}  // namespace qent

#endif  // QENT_METRIC_EXTREMES_HPP_
