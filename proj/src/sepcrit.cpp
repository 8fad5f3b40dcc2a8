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

#include "qent/sepcrit.hpp"

#include <algorithm>
#include <cmath>

#include "qent/error.hpp"

namespace qent {

namespace {

void check_bipartite(const CMat& rho, const Dims& dims) {
  require(dims.size() == 2, "separability criteria need a bipartite split");
  require(rho.rows() == total_dim(dims) && rho.cols() == rho.rows(), "state size does not match dims");
}

RVec spectrum_desc(const CMat& m) {
  CMat h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<CMat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().reverse();
}

// Every prefix sum of coarse (padded with zeros) dominates the one of fine.
bool majorizes(const RVec& coarse, const RVec& fine) {
  double a = 0.0, b = 0.0;
  for (Eigen::Index k = 0; k < fine.size(); ++k) {
    if (k < coarse.size()) a += coarse[k];
    b += fine[k];
    if (a < b - kCriterionTol) return false;
  }
  return true;
}

}  // namespace

EigCriterion ppt(const CMat& rho, const Dims& dims) {
  check_bipartite(rho, dims);
  EigCriterion out;
  out.min_eig = min_eigenvalue(partial_transpose(rho, dims, 0));
  out.pass = out.min_eig >= -kCriterionTol;
  return out;
}

EigCriterion reduction(const CMat& rho, const Dims& dims) {
  check_bipartite(rho, dims);
  const CMat ra = partial_trace(rho, dims, {0});
  const CMat rb = partial_trace(rho, dims, {1});
  const double ma = min_eigenvalue(kron(identity(dims[0]), rb) - rho);
  const double mb = min_eigenvalue(kron(ra, identity(dims[1])) - rho);
  EigCriterion out;
  out.min_eig = std::min(ma, mb);
  out.pass = out.min_eig >= -kCriterionTol;
  return out;
}

MajorizationResult majorization(const CMat& rho, const Dims& dims) {
  check_bipartite(rho, dims);
  const RVec whole = spectrum_desc(rho);
  MajorizationResult out;
  out.a_pass = majorizes(spectrum_desc(partial_trace(rho, dims, {0})), whole);
  out.b_pass = majorizes(spectrum_desc(partial_trace(rho, dims, {1})), whole);
  return out;
}

QEntropicResult q_entropic(const CMat& rho, const Dims& dims, QParam q) {
  check_bipartite(rho, dims);
  QEntropicResult out;
  out.q = q;
  if (q.infinite) {
    const double lm = spectrum_desc(rho)[0];
    const double la = spectrum_desc(partial_trace(rho, dims, {0}))[0];
    const double lb = spectrum_desc(partial_trace(rho, dims, {1}))[0];
    out.s_a_given_b = std::log(lb) - std::log(lm);
    out.s_b_given_a = std::log(la) - std::log(lm);
    out.pass = lm <= std::min(la, lb) + kCriterionTol;
    return out;
  }
  out.s_a_given_b = conditional_q(rho, dims, q, CondSide::kAgivenB, EntropyFamily::kRenyi);
  out.s_b_given_a = conditional_q(rho, dims, q, CondSide::kBgivenA, EntropyFamily::kRenyi);
  out.pass = out.s_a_given_b >= -kCriterionTol && out.s_b_given_a >= -kCriterionTol;
  const double ta = conditional_q(rho, dims, q, CondSide::kAgivenB, EntropyFamily::kTsallis);
  const double tb = conditional_q(rho, dims, q, CondSide::kBgivenA, EntropyFamily::kTsallis);
  out.tsallis_sign_agrees = (ta >= -kCriterionTol && tb >= -kCriterionTol) == out.pass;
  return out;
}

CriterionReport chain_audit(const CMat& rho, const Dims& dims, const std::vector<QParam>& q_list) {
  CriterionReport r;
  r.ppt = ppt(rho, dims);
  r.reduction = reduction(rho, dims);
  r.majorization = majorization(rho, dims);
  for (QParam q : q_list) r.q_entropic.push_back(q_entropic(rho, dims, q));
  bool ok = !(r.ppt.pass && !r.reduction.pass);
  ok = ok && !(r.reduction.pass && !r.majorization.pass());
  for (const auto& qe : r.q_entropic) ok = ok && !(r.majorization.pass() && !qe.pass);
  r.chain_consistent = ok;
  return r;
}

double separable_ball_radius(int n) {
  require(n >= 4, "separable ball needs a composite dimension of at least 4");
  return 1.0 / std::sqrt(2.0 * n * (n - 1.0));
}

bool renyi_threshold_check(const CMat& rho, QParam q) {
  require(q.infinite || q.value >= 2.0, "the ln 3 threshold applies for q >= 2");
  return renyi(rho, q) >= std::log(3.0);
}

}  // namespace qent
