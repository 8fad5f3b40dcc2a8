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

// Maximum-entropy and minimum-variance inference states built from the
// expectation value of an observable diagonal in the Bell basis.

#ifndef QENT_MAXENT_HPP_
#define QENT_MAXENT_HPP_

#include <array>

#include "qent/qmat.hpp"

namespace qent {

// Eigenvalues paired with the Bell states Phi+, Phi-, Psi+, Psi- (in that order).
struct BellDiagObservable {
  std::array<double, 4> eigenvalues{};

  // Bell-CHSH operator at its optimal settings: 2 sqrt2 on Phi+, -2 sqrt2 on Psi-.
  static BellDiagObservable chsh();
  CMat matrix() const;
};

CMat rho_me_chsh(double b);
CMat rho_ms_chsh(double b);

// Minimum-variance state for the observable with the non-diagonal block of
// eigenvalues (kappa, lambda); a in [0, kappa].
CMat rho_ms_nondiag(double a, double kappa = 1.0, double lambda = -1.0);
// Smallest eigenvalue of its partial transpose.
double nondiag_ppt_min_eig(double a, double kappa = 1.0);
// a/kappa where that eigenvalue crosses zero.
double nondiag_transition();

// Two-weight Bell-diagonal state on the eigenstates of eigenvalues lo_index and
// hi_index (kappa < lambda) with Tr(rho B) = b.
CMat boundary_state(double b, const BellDiagObservable& obs, int lo_index, int hi_index);
// Least entangled Bell-diagonal state with Tr(rho B) = b.
CMat min_entanglement_state(double b, const BellDiagObservable& obs);
double critical_dc(double lambda_param);

}  // namespace qent

#endif  // QENT_MAXENT_HPP_
