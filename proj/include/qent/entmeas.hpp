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

// Entanglement and mixedness measures.

#ifndef QENT_ENTMEAS_HPP_
#define QENT_ENTMEAS_HPP_

#include <string>
#include <vector>

#include "qent/qmat.hpp"

namespace qent {

// Entropic index q > 0, or the q -> infinity limit.
struct QParam {
  double value = 2.0;
  bool infinite = false;

  static QParam finite(double q);
  static QParam inf() { return {0.0, true}; }
  // "inf", "infinity" or a positive number.
  static QParam parse(const std::string& text);
  bool is_one() const { return !infinite && value == 1.0; }
  std::string name() const;
};

enum class CondSide { kAgivenB, kBgivenA };
enum class EntropyFamily { kRenyi, kTsallis };

// Two-qubit Wootters concurrence, max(0, l1 - l2 - l3 - l4).
double concurrence(const CMat& rho);
// 2 |psi_00 psi_11 - psi_01 psi_10|.
double concurrence_pure(const CVec& psi);

// Base-2 binary entropy with 0 log 0 = 0.
double binary_entropy(double p);
double eof_from_concurrence(double c);
double eof(const CMat& rho);
double eof_pure(const CVec& psi);

double purity(const CMat& rho);
double participation_ratio(const CMat& rho);
double lambda_max(const CMat& rho);

// Natural-log entropies of a probability vector.
double von_neumann(const RVec& p);
double renyi(const RVec& p, QParam q);
double tsallis(const RVec& p, QParam q);
double renyi(const CMat& rho, QParam q);
double tsallis(const CMat& rho, QParam q);

// Conditional q-entropy S_q(A|B) or S_q(B|A) of a bipartite state.
// The Tsallis family has no finite q -> infinity form and throws there.
double conditional_q(const CMat& rho, const Dims& dims, QParam q, CondSide side, EntropyFamily family);

// 4 det(rho_pivot) - sum_i C^2(rho_{pivot,i}) for an n-qubit pure state.
double residual_tangle_raw(const CVec& psi, int n_qubits, int pivot = 0);
// Same, clamped to [0, 1].
double residual_tangle_dW(const CVec& psi, int n_qubits, int pivot = 0);

// |Tr(rho sigma_y x sigma_y)| for a real two-rebit state.
double rebit_concurrence(const RMat& rho);
// Complex input accepted when its imaginary part is below 1e-12.
double rebit_concurrence(const CMat& rho);

// Two fermions in four single-particle modes. w is the 4x4 antisymmetric
// coefficient matrix with sum_{i<j} |w_ij|^2 = 1/4; the six pair amplitudes
// a_ij = 2 w_ij (i<j, order 01,02,03,12,13,23) form a unit vector.
CVec fermion_pair_amplitudes(const CMat& w);
// 8 |w01 w23 - w02 w13 + w03 w12|.
double fermion_concurrence_pure(const CMat& w);

struct FermionMixedConcurrence {
  double value = 0.0;
  int rank = 0;  // rank of the 6x6 state; ranks below 6 are legitimate inputs
};
// rho is 6x6 over the pair basis above.
FermionMixedConcurrence fermion_concurrence_mixed(const CMat& rho);
// Mixture sum_i p_i |w_i><w_i| of pure pair states.
FermionMixedConcurrence fermion_concurrence_mixed(const std::vector<double>& probs,
                                                  const std::vector<CMat>& ws);

// Two bosons in two modes, v symmetric with 2 sum_ij |v_ij|^2 = 1.
double boson_concurrence(const CMat& v);

double fidelity(const CMat& r1, const CMat& r2);
double bures_distance(const CMat& r1, const CMat& r2);
double hs_distance(const CMat& r1, const CMat& r2);

}  // namespace qent

#endif  // QENT_ENTMEAS_HPP_
