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

// Two-qubit gates and the statistics of the entanglement change they cause.

#ifndef QENT_GATES_HPP_
#define QENT_GATES_HPP_

#include <cstdint>
#include <utility>
#include <vector>

#include "qent/qmat.hpp"
#include "qent/randgen.hpp"
#include "qent/survey.hpp"

namespace qent {

enum class GateKind { kIdentity, kCnot, kHadamard, kUTheta, kNonlocal, kExplicit };

struct GateSpec {
  GateKind kind = GateKind::kIdentity;
  int qubit = 0;        // kHadamard
  double theta = 0.0;   // kUTheta
  double l1 = 0.0, l2 = 0.0, l3 = 0.0;  // kNonlocal
  CMat matrix;          // kExplicit

  static GateSpec identity() { return {}; }
  static GateSpec cnot();
  static GateSpec hadamard_on(int qubit);
  static GateSpec u_theta(double theta);
  // exp(-i sum_k l_k sigma_k x sigma_k); l1 >= l2 >= |l3|, l1, l2 in [0, pi/4], l3 in (-pi/4, pi/4].
  static GateSpec nonlocal(double l1, double l2, double l3);
  static GateSpec explicit_unitary(const CMat& u);
};

// 4x4 unitary; qubit 0 is the slow index.
CMat build_gate(const GateSpec& spec);

// 200 bins of width 0.01 over [-1, 1].
class DeltaEHistogram {
 public:
  static constexpr int kBins = 200;
  static constexpr double kWidth = 0.01;

  DeltaEHistogram() : counts_(kBins, 0) {}
  void add(double delta_e);
  void merge(const DeltaEHistogram& other);

  long long total() const { return total_; }
  const std::vector<long long>& counts() const { return counts_; }
  static double center(int bin) { return -1.0 + (bin + 0.5) * kWidth; }
  static int bin_of(double delta_e);
  double mass(int bin) const;
  double density(int bin) const { return mass(bin) / kWidth; }

 private:
  std::vector<long long> counts_;
  long long total_ = 0;
};

// Largest bin-mass difference between two histograms.
double histogram_sup_distance(const DeltaEHistogram& a, const DeltaEHistogram& b);

struct DeltaEInputs {
  int n_qubits = 2;  // gate acts on qubits 0 and 1; entanglement measured between them
  bool pure = true;
  SimplexMeasure measure = SimplexMeasure::lebesgue();  // mixed inputs, two qubits only
};

DeltaEHistogram delta_e_survey(const CMat& gate, const DeltaEInputs& inputs, long long samples,
                               std::uint64_t seed, int threads = 0);

// Mean EoF of U (psi_A x psi_B) over Haar single-qubit pure inputs.
SurveyEstimate entangling_power(const CMat& gate, long long samples, std::uint64_t seed, int threads = 0,
                                double alpha = 0.05);

struct HalfWidth {
  double raw = 0.0;
  double smoothed = 0.0;  // 3-bin moving average
};
// Largest |dE| whose density is at least half the density next to dE = 0.
HalfWidth width_half_max(const DeltaEHistogram& hist);

// Hadamard on qubit 0 followed by CNOT; EoF before and after.
std::pair<double, double> hadamard_cnot_trace(const CVec& psi);
std::pair<double, double> hadamard_cnot_trace(const CMat& rho);

}  // namespace qent

#endif  // QENT_GATES_HPP_
