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

#include "qent/maxent.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <boost/math/tools/roots.hpp>

#include "qent/error.hpp"
#include "qent/families.hpp"

namespace qent {

namespace {

const double kSqrt2 = std::sqrt(2.0);
const double kBmax = 2.0 * std::sqrt(2.0);

CMat pair_mix(int i, int j) {
  std::array<double, 4> w{};
  w[i] = w[j] = 0.5;
  return bell_diagonal(w);
}

void check_b(double b) { require(std::abs(b) <= kBmax + 1e-12, "|b| must not exceed 2 sqrt2"); }

}  // namespace

BellDiagObservable BellDiagObservable::chsh() { return {{kBmax, 0.0, 0.0, -kBmax}}; }

CMat BellDiagObservable::matrix() const {
  RVec e(4);
  for (int i = 0; i < 4; ++i) e[i] = eigenvalues[i];
  const CMat& b = bell_basis();
  return b * e.cast<cplx>().asDiagonal() * b.adjoint();
}

CMat rho_me_chsh(double b) {
  check_b(b);
  const double q = b * b / 8.0;
  const double side = std::max(0.0, (1.0 - q) / 4.0);
  return bell_diagonal({(1.0 + b / kSqrt2 + q) / 4.0, side, side, std::max(0.0, (1.0 - b / kSqrt2 + q) / 4.0)});
}

CMat rho_ms_chsh(double b) {
  check_b(b);
  const double t = std::min(1.0, std::abs(b) / kBmax);
  const double side = 0.5 * (1.0 - t);
  if (b >= 0.0) return bell_diagonal({t, side, side, 0.0});
  return bell_diagonal({0.0, side, side, t});
}

CMat rho_ms_nondiag(double a, double kappa, double lambda) {
  require(kappa > 0.0 && lambda < kappa, "need lambda < kappa and kappa > 0");
  require(a >= 0.0 && a <= kappa, "a must lie in [0, kappa]");
  const double s = a / kappa;
  const double r = 1.0 / std::sqrt(2.0);
  CVec one = CVec::Zero(4);
  one[3] = r;
  one[0] = r;
  CVec three = CVec::Zero(4), four = CVec::Zero(4);
  three[1] = 1.0;  // |01>
  four[2] = 1.0;   // |10>
  return 0.5 * s * (projector(one) + projector(three)) + (1.0 - s) * projector(four);
}

double nondiag_ppt_min_eig(double a, double kappa) {
  require(kappa > 0.0 && a >= 0.0 && a <= kappa, "a must lie in [0, kappa]");
  const double s = a / kappa;
  // Coupled |01>,|10> block versus the two uncoupled diagonal entries s/4.
  const double block = -s / 4.0 + 0.5 - 0.25 * std::sqrt(s * (10.0 * s - 12.0) + 4.0);
  return std::min(block, s / 4.0);
}

double nondiag_transition() {
  auto f = [](double s) { return nondiag_ppt_min_eig(s, 1.0); };
  boost::math::tools::eps_tolerance<double> tol(52);
  std::uintmax_t iters = 200;
  auto [lo, hi] = boost::math::tools::toms748_solve(f, 0.5, 1.0, tol, iters);
  return 0.5 * (lo + hi);
}

CMat boundary_state(double b, const BellDiagObservable& obs, int lo_index, int hi_index) {
  require(lo_index >= 0 && lo_index < 4 && hi_index >= 0 && hi_index < 4 && lo_index != hi_index,
          "invalid Bell indices");
  const double kappa = obs.eigenvalues[lo_index], lambda = obs.eigenvalues[hi_index];
  require(kappa < lambda, "boundary pair needs kappa < lambda");
  require(b >= kappa - 1e-12 && b <= lambda + 1e-12, "b must lie in [kappa, lambda]");
  const double t = std::clamp((b - kappa) / (lambda - kappa), 0.0, 1.0);
  std::array<double, 4> w{};
  w[hi_index] = t;
  w[lo_index] = 1.0 - t;
  return bell_diagonal(w);
}

CMat min_entanglement_state(double b, const BellDiagObservable& obs) {
  std::array<int, 4> order{0, 1, 2, 3};
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return obs.eigenvalues[x] < obs.eigenvalues[y]; });
  const auto& e = obs.eigenvalues;
  require(e[order[0]] < e[order[3]], "observable needs two distinct eigenvalues");
  require(b >= e[order[0]] - 1e-12 && b <= e[order[3]] + 1e-12, "b outside the observable's range");
  const double low = 0.5 * (e[order[0]] + e[order[1]]);
  const double high = 0.5 * (e[order[2]] + e[order[3]]);
  if (b <= low) {
    if (e[order[0]] == e[order[1]]) return pair_mix(order[0], order[1]);
    return boundary_state(b, obs, order[0], order[1]);
  }
  if (b >= high) {
    if (e[order[2]] == e[order[3]]) return pair_mix(order[2], order[3]);
    return boundary_state(b, obs, order[2], order[3]);
  }
  const double t = (b - low) / (high - low);
  std::array<double, 4> w{};
  w[order[0]] = w[order[1]] = 0.5 * (1.0 - t);
  w[order[2]] = w[order[3]] = 0.5 * t;
  return bell_diagonal(w);
}

double critical_dc(double lambda_param) { return (kBmax + lambda_param) / 2.0; }

}  // namespace qent
