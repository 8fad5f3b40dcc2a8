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

// Closed-form special states.

#ifndef QENT_FAMILIES_HPP_
#define QENT_FAMILIES_HPP_

#include <array>

#include "qent/qmat.hpp"

namespace qent {

// Phi+- = (|00> +- |11>)/sqrt2, Psi+- = (|10> +- |01>)/sqrt2.
enum class BellLabel { kPhiPlus, kPhiMinus, kPsiPlus, kPsiMinus };

CVec bell(BellLabel label);
// Columns Phi+, Phi-, Psi+, Psi- in the computational basis.
const CMat& bell_basis();
// sum_i w_i |B_i><B_i| with weights in the column order of bell_basis().
CMat bell_diagonal(const std::array<double, 4>& weights);

// x |Phi+><Phi+| + (1-x) I/4.
CMat werner(double x);

double mems_g(double x);
CMat mems(double x);
// Inverse of R(x) = 1/Tr(mems(x)^2) on [1, 3].
double mems_x_for_R(double r_val);

// p1 >= p2 >= p3 >= p4, sum 1.
CMat ih_state(const std::array<double, 4>& p);

struct IhConcurrence {
  double value = 0.0;
  bool rank4 = false;  // closed form only checked numerically at full rank
};
IhConcurrence ih_concurrence(const std::array<double, 4>& p);
// Smallest IH concurrence compatible with participation ratio R in [1, 3].
double ih_lower_bound(double r_val);

CVec ghz(int n);
CVec w_state(int n);
// (1/4)(I - sum_i |psi_i><psi_i|) over the four product vectors of the SHIFTS
// unextendible product basis; three qubits.
CMat upb_shifts_complement();

}  // namespace qent

#endif  // QENT_FAMILIES_HPP_
