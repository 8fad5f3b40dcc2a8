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

#include "qent/families.hpp"

#include <cmath>

#include <boost/math/tools/roots.hpp>

#include "qent/error.hpp"

namespace qent {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

CVec ket(int index, int dim) {
  CVec v = CVec::Zero(dim);
  v[index] = 1.0;
  return v;
}

void check_ih(const std::array<double, 4>& p) {
  for (double x : p) require(x >= -1e-15, "IH weights must be non-negative");
  require(p[0] >= p[1] && p[1] >= p[2] && p[2] >= p[3], "IH weights must be sorted descending");
  require(std::abs(p[0] + p[1] + p[2] + p[3] - 1.0) <= 1e-12, "IH weights must sum to 1");
}

double mems_purity(double x) {
  const double g = mems_g(x);
  return 2.0 * g * g + (1.0 - 2.0 * g) * (1.0 - 2.0 * g) + 0.5 * x * x;
}

}  // namespace

CVec bell(BellLabel label) {
  CVec v = CVec::Zero(4);
  switch (label) {
    case BellLabel::kPhiPlus:
      v[0] = kInvSqrt2;
      v[3] = kInvSqrt2;
      break;
    case BellLabel::kPhiMinus:
      v[0] = kInvSqrt2;
      v[3] = -kInvSqrt2;
      break;
    case BellLabel::kPsiPlus:
      v[2] = kInvSqrt2;
      v[1] = kInvSqrt2;
      break;
    case BellLabel::kPsiMinus:
      v[2] = kInvSqrt2;
      v[1] = -kInvSqrt2;
      break;
  }
  return v;
}

const CMat& bell_basis() {
  static const CMat b = [] {
    CMat m(4, 4);
    m.col(0) = bell(BellLabel::kPhiPlus);
    m.col(1) = bell(BellLabel::kPhiMinus);
    m.col(2) = bell(BellLabel::kPsiPlus);
    m.col(3) = bell(BellLabel::kPsiMinus);
    return m;
  }();
  return b;
}

CMat bell_diagonal(const std::array<double, 4>& weights) {
  RVec w(4);
  for (int i = 0; i < 4; ++i) {
    require(weights[i] >= -1e-15, "Bell weights must be non-negative");
    w[i] = weights[i];
  }
  require(std::abs(w.sum() - 1.0) <= 1e-12, "Bell weights must sum to 1");
  const CMat& b = bell_basis();
  return b * w.cast<cplx>().asDiagonal() * b.adjoint();
}

CMat werner(double x) {
  require(x >= 0.0 && x <= 1.0, "Werner mixing must lie in [0,1]");
  return x * projector(bell(BellLabel::kPhiPlus)) + (1.0 - x) * 0.25 * identity(4);
}

double mems_g(double x) {
  require(x >= 0.0 && x <= 1.0, "MEMS parameter must lie in [0,1]");
  return x <= 2.0 / 3.0 ? 1.0 / 3.0 : 0.5 * x;
}

CMat mems(double x) {
  const double g = mems_g(x);
  CMat m = CMat::Zero(4, 4);
  m(0, 0) = g;
  m(3, 3) = g;
  m(1, 1) = 1.0 - 2.0 * g;
  m(0, 3) = 0.5 * x;
  m(3, 0) = 0.5 * x;
  return m;
}

double mems_x_for_R(double r_val) {
  require(r_val >= 1.0 && r_val <= 3.0, "MEMS participation ratio must lie in [1,3]");
  const double target = 1.0 / r_val;
  if (r_val >= 3.0) return 0.0;
  if (r_val <= 1.0) return 1.0;
  // Tr rho^2 increases monotonically in x.
  auto f = [target](double x) { return mems_purity(x) - target; };
  boost::math::tools::eps_tolerance<double> tol(50);
  std::uintmax_t iters = 200;
  auto [lo, hi] = boost::math::tools::toms748_solve(f, 0.0, 1.0, tol, iters);
  return 0.5 * (lo + hi);
}

CMat ih_state(const std::array<double, 4>& p) {
  check_ih(p);
  CMat m = CMat::Zero(4, 4);
  m(0, 0) = p[1];
  m(1, 1) = m(2, 2) = 0.5 * (p[2] + p[0]);
  m(1, 2) = m(2, 1) = 0.5 * (p[2] - p[0]);
  m(3, 3) = p[3];
  return m;
}

IhConcurrence ih_concurrence(const std::array<double, 4>& p) {
  check_ih(p);
  IhConcurrence out;
  out.value = std::max(0.0, p[0] - p[2] - 2.0 * std::sqrt(p[1] * p[3]));
  out.rank4 = p[3] > 1e-12;
  return out;
}

double ih_lower_bound(double r_val) {
  require(r_val >= 1.0 && r_val <= 3.0, "participation ratio must lie in [1,3]");
  return (std::sqrt(3.0 * r_val * (4.0 - r_val)) - r_val) / (2.0 * r_val);
}

CVec ghz(int n) {
  require(n >= 2, "GHZ state needs at least two qubits");
  const int dim = 1 << n;
  return kInvSqrt2 * (ket(0, dim) + ket(dim - 1, dim));
}

CVec w_state(int n) {
  require(n >= 2, "W state needs at least two qubits");
  const int dim = 1 << n;
  CVec v = CVec::Zero(dim);
  for (int q = 0; q < n; ++q) v[1 << q] = 1.0;
  return v / std::sqrt(static_cast<double>(n));
}

CMat upb_shifts_complement() {
  CVec zero = ket(0, 2), one = ket(1, 2);
  CVec plus = kInvSqrt2 * (zero + one), minus = kInvSqrt2 * (zero - one);
  const CVec vecs[4] = {kron(kron(zero, one), plus), kron(kron(one, plus), zero),
                        kron(kron(plus, zero), one), kron(kron(minus, minus), minus)};
  CMat rho = identity(8);
  for (const CVec& v : vecs) rho -= projector(v);
  return 0.25 * rho;
}

}  // namespace qent
