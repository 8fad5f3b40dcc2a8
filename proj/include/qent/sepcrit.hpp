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

// Separability criteria and the audit of their implication chain
// PPT => reduction => majorization => conditional q-entropic.

#ifndef QENT_SEPCRIT_HPP_
#define QENT_SEPCRIT_HPP_

#include <vector>

#include "qent/entmeas.hpp"
#include "qent/qmat.hpp"

namespace qent {

inline constexpr double kCriterionTol = 1e-10;

struct EigCriterion {
  bool pass = false;
  double min_eig = 0.0;
};

struct MajorizationResult {
  bool a_pass = false;  // lambda(rho_A) majorizes lambda(rho)
  bool b_pass = false;
  bool pass() const { return a_pass && b_pass; }
};

struct QEntropicResult {
  QParam q;
  bool pass = false;
  double s_a_given_b = 0.0;  // Renyi family
  double s_b_given_a = 0.0;
  bool tsallis_sign_agrees = true;  // finite q only
};

// Partial transpose on the first factor.
EigCriterion ppt(const CMat& rho, const Dims& dims);
// Both I x rho_B - rho and rho_A x I - rho checked; min over the two.
EigCriterion reduction(const CMat& rho, const Dims& dims);
MajorizationResult majorization(const CMat& rho, const Dims& dims);
QEntropicResult q_entropic(const CMat& rho, const Dims& dims, QParam q);

struct CriterionReport {
  EigCriterion ppt;
  EigCriterion reduction;
  MajorizationResult majorization;
  std::vector<QEntropicResult> q_entropic;
  bool chain_consistent = true;
};

CriterionReport chain_audit(const CMat& rho, const Dims& dims, const std::vector<QParam>& q_list);

// Radius of the largest ball around I/N made only of separable states,
// in the Hilbert-Schmidt norm.
double separable_ball_radius(int n);
// True when S_q^Renyi(rho) >= ln 3, q >= 2.
bool renyi_threshold_check(const CMat& rho, QParam q);

}  // namespace qent

#endif  // QENT_SEPCRIT_HPP_
